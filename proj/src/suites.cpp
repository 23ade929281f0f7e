#include "suites.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include <json.hpp>

#include "capacity.hpp"
#include "composition.hpp"
#include "dynamics.hpp"
#include "geometry.hpp"
#include "mub.hpp"
#include "rng.hpp"
#include "sampling.hpp"
#include "state.hpp"

namespace qklab {

namespace {

using Params = std::map<std::string, std::string>;

std::string fmt_int(long long v) { return std::to_string(v); }

std::string fmt_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

RandomSource check_rng(const RunManifest& m, const std::string& check_name) {
  return RandomSource(m.seed).split(fnv1a64(check_name));
}

std::string seed_str(const RunManifest& m) { return std::to_string(m.seed); }

std::string dims_str(const std::vector<int>& dims) {
  std::string out;
  for (int n : dims) {
    if (!out.empty()) out += ';';
    out += std::to_string(n);
  }
  return out;
}

void add(std::vector<CheckReport>& out, std::string name, Params params, double value,
         Comparator cmp, double bound, double tolerance) {
  out.push_back(make_check(std::move(name), std::move(params), value, cmp, bound, tolerance));
}

std::vector<int> dims_or(const RunManifest& m, std::vector<int> defaults) {
  if (m.n >= 1 && m.n <= kMaxDim) return {m.n};
  return defaults;
}

int samples_or(const RunManifest& m, int fallback) {
  return m.samples > 0 ? m.samples : fallback;
}

// ---------------------------------------------------------------------------
// kernel suite

std::vector<CheckReport> kernel_suite(const RunManifest& m) {
  std::vector<CheckReport> out;
  const std::vector<int> dims = dims_or(m, {2, 3, 5});
  const int pairs = samples_or(m, 100);

  {
    RandomSource rng = check_rng(m, "kernel.self_equality");
    double worst = 0.0;
    for (int n : dims)
      for (int i = 0; i < pairs; ++i) {
        const PureState x = haar_random_state(n, rng);
        worst = std::max(worst, kernel(x, x));
      }
    add(out, "kernel.self_equality", {{"dims", dims_str(dims)}, {"pairs", fmt_int(pairs)}, {"seed", seed_str(m)}},
        worst, Comparator::LessEq, 0.0, kTolAlg);
  }
  {
    RandomSource rng = check_rng(m, "kernel.symmetry");
    double worst = 0.0;
    for (int n : dims)
      for (int i = 0; i < pairs; ++i) {
        const PureState x = haar_random_state(n, rng);
        const PureState y = haar_random_state(n, rng);
        worst = std::max(worst, std::abs(kernel(x, y) - kernel(y, x)));
      }
    add(out, "kernel.symmetry", {{"pairs", fmt_int(pairs)}, {"seed", seed_str(m)}}, worst,
        Comparator::LessEq, 0.0, kTolAlg);
  }
  {
    RandomSource rng = check_rng(m, "kernel.range");
    double worst = 0.0;  // violation of [0, 1] before clamping
    for (int n : dims)
      for (int i = 0; i < pairs; ++i) {
        const PureState x = haar_random_state(n, rng);
        const PureState y = haar_random_state(n, rng);
        const double raw = 1.0 - std::norm(inner(x, y));
        worst = std::max({worst, raw - 1.0, -raw});
      }
    add(out, "kernel.range", {{"pairs", fmt_int(pairs)}, {"seed", seed_str(m)}}, worst,
        Comparator::LessEq, 0.0, kTolAlg);
  }
  {
    const Basis e = Basis::computational(3);
    add(out, "kernel.orthogonal_pair", {{"n", "3"}}, kernel(e.vector(0), e.vector(1)),
        Comparator::Approx, 1.0, kTolAlg);
    Vec c(3);
    c << 1.0, 1.0, 1.0;
    const PureState psi = PureState::from_coefficients(c);
    add(out, "kernel.superposition_vs_basis", {{"n", "3"}}, kernel(psi, e.vector(0)),
        Comparator::Approx, 2.0 / 3.0, kTolAlg);
    add(out, "kernel.state_normalization", {{"n", "3"}},
        std::abs(psi.coefficients().norm() - 1.0), Comparator::LessEq, 0.0, kTolAlg);
    const RealVec p = affinities(psi, e);
    add(out, "kernel.affinity_equal_superposition", {{"n", "3"}},
        (p.array() - 1.0 / 3.0).abs().maxCoeff(), Comparator::LessEq, 0.0, kTolAlg);
  }
  {
    RandomSource rng = check_rng(m, "kernel.unitary_invariance");
    double worst = 0.0;
    for (int n : dims)
      for (int i = 0; i < pairs; ++i) {
        const PureState x = haar_random_state(n, rng);
        const PureState y = haar_random_state(n, rng);
        const Unitary u = haar_random_unitary(n, rng);
        worst = std::max(worst, std::abs(kernel(u.apply(x), u.apply(y)) - kernel(x, y)));
      }
    add(out, "kernel.unitary_invariance", {{"triples", fmt_int(pairs)}, {"seed", seed_str(m)}},
        worst, Comparator::LessEq, 0.0, kTolAlg);
  }
  {
    RandomSource rng = check_rng(m, "kernel.affinity_sum");
    double worst = 0.0;
    for (int n : dims) {
      const Basis haar_basis = Basis::from_unitary_columns(haar_random_unitary(n, rng).matrix());
      for (int i = 0; i < pairs; ++i) {
        const PureState x = haar_random_state(n, rng);
        worst = std::max(worst, std::abs(affinities(x, Basis::computational(n)).sum() - 1.0));
        worst = std::max(worst, std::abs(affinities(x, haar_basis).sum() - 1.0));
      }
    }
    add(out, "kernel.affinity_sum", {{"states", fmt_int(pairs)}, {"seed", seed_str(m)}}, worst,
        Comparator::LessEq, 0.0, kTolAlg);
  }
  {
    double worst = 0.0;
    for (int n : dims) {
      const Basis e = Basis::computational(n);
      for (int j = 0; j < n; ++j) {
        const RealVec p = affinities(e.vector(j), e);
        for (int k = 0; k < n; ++k)
          worst = std::max(worst, std::abs(p[k] - (j == k ? 1.0 : 0.0)));
      }
    }
    add(out, "kernel.affinity_basis_delta", {}, worst, Comparator::LessEq, 0.0, kTolAlg);
  }
  {
    RandomSource rng = check_rng(m, "kernel.mixed_pure_consistency");
    double worst = 0.0;
    for (int n : dims)
      for (int i = 0; i < pairs; ++i) {
        const PureState psi = haar_random_state(n, rng);
        const PureState z = haar_random_state(n, rng);
        worst = std::max(worst,
                         std::abs(mixed_kernel(DensityOperator::pure(psi), z) - kernel(psi, z)));
      }
    add(out, "kernel.mixed_pure_consistency", {{"pairs", fmt_int(pairs)}, {"seed", seed_str(m)}},
        worst, Comparator::LessEq, 0.0, kTolAlg);
  }
  {
    RandomSource rng = check_rng(m, "kernel.mixed_maximally_mixed");
    const DensityOperator rho = DensityOperator::maximally_mixed(4);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i)
      worst = std::max(worst, std::abs(mixed_kernel(rho, haar_random_state(4, rng)) - 0.75));
    add(out, "kernel.mixed_maximally_mixed", {{"n", "4"}, {"seed", seed_str(m)}}, worst,
        Comparator::LessEq, 0.0, kTolAlg);
  }
  {
    RandomSource a = check_rng(m, "kernel.haar_reproducibility");
    RandomSource b = check_rng(m, "kernel.haar_reproducibility");
    double worst = 0.0;
    const PureState sa = haar_random_state(3, a);
    const PureState sb = haar_random_state(3, b);
    worst = std::max(worst, (sa.coefficients() - sb.coefficients()).cwiseAbs().maxCoeff());
    const Unitary ua = haar_random_unitary(3, a);
    const Unitary ub = haar_random_unitary(3, b);
    worst = std::max(worst, max_abs(ua.matrix() - ub.matrix()));
    add(out, "kernel.haar_reproducibility", {{"seed", seed_str(m)}}, worst, Comparator::LessEq,
        0.0, 0.0);
  }
  {
    RandomSource rng = check_rng(m, "kernel.haar_state_moment");
    const int draws = 10000;  // the 0.02 window is calibrated to this count
    double mean = 0.0;
    for (int i = 0; i < draws; ++i) mean += std::norm(haar_random_state(2, rng).amplitude(0));
    mean /= draws;
    add(out, "kernel.haar_state_moment", {{"draws", fmt_int(draws)}, {"n", "2"}, {"seed", seed_str(m)}},
        mean, Comparator::Approx, 0.5, 0.02);
  }
  {
    RandomSource rng = check_rng(m, "kernel.haar_unitary_moment");
    const int draws = 10000;
    double mean = 0.0;
    for (int i = 0; i < draws; ++i) mean += std::norm(haar_random_unitary(2, rng).matrix()(0, 0));
    mean /= draws;
    add(out, "kernel.haar_unitary_moment", {{"draws", fmt_int(draws)}, {"n", "2"}, {"seed", seed_str(m)}},
        mean, Comparator::Approx, 0.5, 0.02);
  }
  {
    RandomSource rng = check_rng(m, "kernel.haar_unitary_unitarity");
    double worst = 0.0;
    for (int n : dims)
      for (int i = 0; i < 20; ++i) {
        const Mat u = haar_random_unitary(n, rng).matrix();
        worst = std::max(worst, max_abs(u.adjoint() * u - Mat::Identity(n, n)));
      }
    add(out, "kernel.haar_unitary_unitarity", {{"draws", "20"}, {"seed", seed_str(m)}}, worst,
        Comparator::LessEq, 0.0, kTolAlg);
  }
  {
    Vec c(1);
    c << Complex(0.0, -0.7);
    const PureState only = PureState::from_coefficients(c);
    add(out, "kernel.n1_unique_state", {{"n", "1"}},
        std::abs(only.amplitude(0) - Complex(1.0, 0.0)), Comparator::LessEq, 0.0, kTolAlg);
  }
  return out;
}

// ---------------------------------------------------------------------------
// dynamics suite

std::vector<CheckReport> dynamics_suite(const RunManifest& m) {
  std::vector<CheckReport> out;

  {
    double worst_identity = 0.0;
    double closest_early = 1e300;
    for (int n = 2; n <= 12; ++n) {
      const Mat p = cyclic_generator(n).permutation.matrix();
      Mat power = Mat::Identity(n, n);
      for (int k = 1; k <= n; ++k) {
        power = p * power;
        const double dev = max_abs(power - Mat::Identity(n, n));
        if (k < n)
          closest_early = std::min(closest_early, dev);
        else
          worst_identity = std::max(worst_identity, dev);
      }
    }
    add(out, "dynamics.order_identity", {{"n_range", "2..12"}}, worst_identity,
        Comparator::LessEq, 0.0, kTolAlg);
    add(out, "dynamics.order_no_early_return", {{"n_range", "2..12"}}, closest_early,
        Comparator::GreaterEq, 0.5, 0.0);
  }
  {
    double worst = 0.0;
    double n2_imag = 0.0;
    double obstruction = 1e300;
    for (int n = 2; n <= 12; ++n) {
      Eigen::ComplexEigenSolver<Mat> es(cyclic_generator(n).permutation.matrix());
      double max_imag = 0.0;
      for (int k = 0; k < n; ++k) {
        const double angle = 2.0 * kPi * k / n;
        const Complex root(std::cos(angle), std::sin(angle));
        double best = 1e300;
        for (int j = 0; j < n; ++j) best = std::min(best, std::abs(es.eigenvalues()[j] - root));
        worst = std::max(worst, best);
      }
      for (int j = 0; j < n; ++j) max_imag = std::max(max_imag, std::abs(es.eigenvalues()[j].imag()));
      if (n == 2) n2_imag = max_imag;
      if (n >= 3) obstruction = std::min(obstruction, max_imag);
    }
    add(out, "dynamics.eigenvalue_roots_of_unity", {{"n_range", "2..12"}}, worst,
        Comparator::LessEq, 0.0, kTolAlg);
    add(out, "dynamics.spectral_reality_n2", {{"n", "2"}}, n2_imag, Comparator::LessEq, 0.0,
        kTolAlg);
    add(out, "dynamics.spectral_obstruction", {{"n_range", "3..12"}}, obstruction,
        Comparator::GreaterEq, 0.1, 0.0);
  }
  {
    const Mat p = cyclic_generator(3).permutation.matrix();
    Vec e0 = Vec::Zero(3), e1 = Vec::Zero(3);
    e0[0] = 1.0;
    e1[1] = 1.0;
    add(out, "dynamics.shift_action", {{"n", "3"}}, (p * e0 - e1).cwiseAbs().maxCoeff(),
        Comparator::LessEq, 0.0, kTolAlg);
  }
  {
    double eigen_dev = 0.0, pair_dev = 0.0, cross_dev = 0.0;
    for (int n = 2; n <= 8; ++n) {
      const Mat p = cyclic_generator(n).permutation.matrix();
      const Basis f = fourier_eigenbasis(n);
      const Basis e = Basis::computational(n);
      for (int k = 0; k < n; ++k) {
        const double angle = 2.0 * kPi * k / n;
        const Complex root(std::cos(angle), std::sin(angle));
        eigen_dev = std::max(eigen_dev, (p * f.vector(k).coefficients() -
                                         root * f.vector(k).coefficients())
                                            .cwiseAbs()
                                            .maxCoeff());
        for (int l = 0; l < n; ++l) {
          if (l != k)
            pair_dev = std::max(pair_dev, std::abs(kernel(f.vector(k), f.vector(l)) - 1.0));
          cross_dev = std::max(cross_dev,
                               std::abs(kernel(e.vector(l), f.vector(k)) - (1.0 - 1.0 / n)));
        }
      }
    }
    add(out, "dynamics.fourier_eigenrelation", {{"n_range", "2..8"}}, eigen_dev,
        Comparator::LessEq, 0.0, kTolAlg);
    add(out, "dynamics.fourier_pairwise_kernel", {{"n_range", "2..8"}}, pair_dev,
        Comparator::LessEq, 0.0, kTolAlg);
    add(out, "dynamics.cross_kernel_uniform", {{"n_range", "2..8"}}, cross_dev,
        Comparator::LessEq, 0.0, kTolAlg);
  }
  {
    const Basis f = fourier_eigenbasis(2);
    Vec plus(2), minus(2);
    plus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
    minus << 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0);
    const double dev = std::max((f.vector(0).coefficients() - plus).cwiseAbs().maxCoeff(),
                                (f.vector(1).coefficients() - minus).cwiseAbs().maxCoeff());
    add(out, "dynamics.fourier_n2_hadamard", {{"n", "2"}}, dev, Comparator::LessEq, 0.0, kTolAlg);
  }
  {
    RandomSource rng = check_rng(m, "dynamics.interpolation");
    double id_dev = 0.0, step_dev = 0.0, recur_dev = 0.0, group_dev = 0.0, preserve_dev = 0.0;
    for (int n : {2, 3, 5, 8}) {
      const CyclicGenerator gen = cyclic_generator(n);
      const double period = n;  // one discrete step per unit time
      const EvolutionFamily family = EvolutionFamily::interpolate(gen, period);
      id_dev = std::max(id_dev, max_abs(family.evaluate(0.0).matrix() - Mat::Identity(n, n)));
      step_dev = std::max(step_dev, max_abs(family.evaluate(period / n).matrix() -
                                            gen.permutation.matrix()));
      recur_dev = std::max(recur_dev, max_abs(family.evaluate(period).matrix() - Mat::Identity(n, n)));
      for (int i = 0; i < 100; ++i) {
        const double t = rng.uniform(0.0, period);
        const double s = rng.uniform(0.0, period);
        group_dev = std::max(group_dev, max_abs(family.evaluate(t).matrix() *
                                                    family.evaluate(s).matrix() -
                                                family.evaluate(t + s).matrix()));
      }
      for (int i = 0; i < 20; ++i) {
        const double t = rng.uniform(0.0, period);
        const PureState x = haar_random_state(n, rng);
        const PureState y = haar_random_state(n, rng);
        const Unitary u = family.evaluate(t);
        preserve_dev =
            std::max(preserve_dev, std::abs(kernel(u.apply(x), u.apply(y)) - kernel(x, y)));
      }
    }
    add(out, "dynamics.interp_identity", {{"dims", "2;3;5;8"}}, id_dev, Comparator::LessEq, 0.0,
        kTolAlg);
    add(out, "dynamics.interp_step", {{"dims", "2;3;5;8"}}, step_dev, Comparator::LessEq, 0.0,
        kTolAlg);
    add(out, "dynamics.interp_recurrence", {{"dims", "2;3;5;8"}}, recur_dev, Comparator::LessEq,
        0.0, 1e-10);
    add(out, "dynamics.interp_group_law", {{"dims", "2;3;5;8"}, {"seed", seed_str(m)}}, group_dev,
        Comparator::LessEq, 0.0, 1e-10);
    add(out, "dynamics.kernel_preserved_orbit", {{"dims", "2;3;5;8"}, {"seed", seed_str(m)}},
        preserve_dev, Comparator::LessEq, 0.0, 1e-10);
  }
  {
    RandomSource rng = check_rng(m, "dynamics.hamiltonian");
    const int n = 3;
    const double period = 3.0;
    const EvolutionFamily family = EvolutionFamily::interpolate(cyclic_generator(n), period);
    const Hamiltonian h = hamiltonian_from_cycle(family);
    add(out, "dynamics.hamiltonian_hermitian", {{"n", "3"}},
        max_abs(h.entries - Mat(h.entries.adjoint())), Comparator::LessEq, 0.0, kTolAlg);
    double gen_dev = 0.0;
    for (int i = 0; i < 20; ++i) {
      const double t = rng.uniform(0.0, period);
      gen_dev = std::max(gen_dev, max_abs(evolve(h, t).matrix() - family.evaluate(t).matrix()));
    }
    add(out, "dynamics.hamiltonian_generates", {{"n", "3"}, {"samples", "20"}, {"seed", seed_str(m)}},
        gen_dev, Comparator::LessEq, 0.0, kTolIter);
    add(out, "dynamics.hamiltonian_recurrence", {{"n", "3"}},
        max_abs(evolve(h, period).matrix() - Mat::Identity(n, n)), Comparator::LessEq, 0.0, 1e-10);
  }
  {
    long long mismatches = 0;
    long long checked = 0;
    for (int n = 2; n <= 5; ++n) {
      std::vector<int> sigma(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) sigma[static_cast<std::size_t>(i)] = i;
      do {
        const PermutationEigenProfile profile = permutation_eigen_analysis(sigma);
        int orbit_count = 0;
        for (const auto& e : profile.eigenvectors)
          orbit_count = std::max(orbit_count, e.orbit_index + 1);
        const bool single_cycle =
            orbit_count == 1 && profile.eigenvectors.front().orbit_size == n;
        if (profile.uniform != single_cycle) ++mismatches;
        ++checked;
      } while (std::next_permutation(sigma.begin(), sigma.end()));
    }
    add(out, "dynamics.cycle_uniformity_dichotomy",
        {{"n_range", "2..5"}, {"permutations", fmt_int(checked)}},
        static_cast<double>(mismatches), Comparator::LessEq, 0.0, 0.0);
  }
  {
    // sigma = (0 1)(2): kernel 1/2 inside the 2-orbit, 1 across orbits.
    const PermutationEigenProfile profile = permutation_eigen_analysis({1, 0, 2});
    double dev = 0.0;
    for (std::size_t col = 0; col < profile.eigenvectors.size(); ++col) {
      const auto& entry = profile.eigenvectors[col];
      for (int i = 0; i < 3; ++i) {
        const bool in_orbit = (entry.orbit_size == 2) ? (i == 0 || i == 1) : (i == 2);
        const double expected = in_orbit ? entry.in_orbit_kernel : 1.0;
        dev = std::max(dev, std::abs(profile.kernel_table(i, static_cast<int>(col)) - expected));
      }
    }
    if (profile.uniform) dev = std::max(dev, 1.0);  // must be non-uniform
    add(out, "dynamics.two_cycle_profile", {{"sigma", "(01)(2)"}}, dev, Comparator::LessEq, 0.0,
        kTolAlg);
  }
  {
    const int resolution = samples_or(m, 100);
    const ObstructionScan scan = n2_obstruction_scan(std::max(resolution, 100));
    add(out, "dynamics.n2_scan_cluster_count",
        {{"resolution", fmt_int(scan.resolution)}, {"grid_points", fmt_int(static_cast<long long>(scan.resolution) * scan.resolution)}},
        static_cast<double>(scan.cluster_count()), Comparator::Approx, 4.0, 0.0);
    add(out, "dynamics.n2_scan_center_accuracy", {{"resolution", fmt_int(scan.resolution)}},
        scan.worst_center_error, Comparator::LessEq, 2.0 / scan.resolution, 0.0);
  }
  {
    Mat swap(2, 2);
    swap << 0.0, 1.0, 1.0, 0.0;
    double unitary_dev = 0.0, commute_dev = 0.0;
    double nontrivial = 1e300;
    for (int i = 0; i <= 60; ++i) {
      const double theta = kPi * i / 60.0;
      const Mat u = n2_complex_family(theta);
      unitary_dev = std::max(unitary_dev, max_abs(u.adjoint() * u - Mat::Identity(2, 2)));
      commute_dev = std::max(commute_dev, max_abs(u * swap - swap * u));
      if (theta > 0.3 && theta < kPi - 0.3) {
        const Complex mean_diag = (u(0, 0) + u(1, 1)) / 2.0;
        Mat centered = u;
        centered(0, 0) -= mean_diag;
        centered(1, 1) -= mean_diag;
        nontrivial = std::min(nontrivial, max_abs(centered));
      }
    }
    add(out, "dynamics.n2_complex_family_unitary", {{"thetas", "61"}}, unitary_dev,
        Comparator::LessEq, 0.0, kTolAlg);
    add(out, "dynamics.n2_complex_family_commutes", {{"thetas", "61"}}, commute_dev,
        Comparator::LessEq, 0.0, kTolAlg);
    add(out, "dynamics.n2_complex_family_nontrivial", {{"theta_window", "0.3..pi-0.3"}},
        nontrivial, Comparator::GreaterEq, 0.1, 0.0);
  }
  {
    RandomSource rng = check_rng(m, "dynamics.holonomy");
    const PureState psi = haar_random_state(3, rng);
    add(out, "dynamics.holonomy_constant_loop", {{"n", "3"}, {"seed", seed_str(m)}},
        std::abs(bargmann_holonomy({psi, psi, psi})), Comparator::LessEq, 0.0, kTolAlg);

    Vec e0(2), plus(2), plus_i(2);
    e0 << 1.0, 0.0;
    plus << 1.0, 1.0;
    plus_i << 1.0, Complex(0.0, 1.0);
    const PureState a = PureState::from_coefficients(e0);
    const PureState b = PureState::from_coefficients(plus);
    const PureState c = PureState::from_coefficients(plus_i);
    const double phase = bargmann_holonomy({a, b, c, a});
    add(out, "dynamics.holonomy_octant_triangle", {{"n", "2"}}, phase, Comparator::Approx,
        kPi / 4.0, kTolAlg);

    // Rephasing an interior state must not move the holonomy.
    const PureState b2 = PureState::from_coefficients(Complex(std::cos(1.1), std::sin(1.1)) * plus);
    add(out, "dynamics.holonomy_gauge_invariance", {{"n", "2"}},
        std::abs(bargmann_holonomy({a, b2, c, a}) - phase), Comparator::LessEq, 0.0, kTolAlg);
  }
  return out;
}

// ---------------------------------------------------------------------------
// mub suite

std::vector<CheckReport> mub_suite(const RunManifest& m) {
  std::vector<CheckReport> out;
  std::vector<int> dims = {2, 3, 5, 7, 11, 13};
  if (m.n >= 2 && is_supported_mub_dimension(m.n)) dims = {m.n};

  {
    double size_dev = 0.0, unbiased_dev = 0.0, ortho_dev = 0.0;
    for (int n : dims) {
      const MubFamily family = mub_family(n);
      size_dev = std::max(size_dev, std::abs(static_cast<double>(family.size() - (n + 1))));
      unbiased_dev = std::max(unbiased_dev, verify_unbiased(family));
      for (const Basis& b : family.bases) {
        const Mat gram = b.matrix().adjoint() * b.matrix();
        ortho_dev = std::max(ortho_dev, max_abs(gram - Mat::Identity(n, n)));
      }
    }
    add(out, "mub.family_size", {{"dims", dims_str(dims)}}, size_dev, Comparator::LessEq, 0.0,
        0.0);
    add(out, "mub.unbiased_deviation", {{"dims", dims_str(dims)}}, unbiased_dev,
        Comparator::LessEq, 0.0, kTolAlg);
    add(out, "mub.internal_orthonormality", {{"dims", dims_str(dims)}}, ortho_dev,
        Comparator::LessEq, 0.0, kTolAlg);
  }
  {
    RandomSource rng = check_rng(m, "mub.unitary_covariance");
    const int n = 5;
    const Unitary u = haar_random_unitary(n, rng);
    MubFamily rotated = mub_family(n);
    for (Basis& b : rotated.bases) b = Basis::from_unitary_columns(u.matrix() * b.matrix());
    add(out, "mub.unitary_covariance", {{"n", "5"}, {"seed", seed_str(m)}},
        verify_unbiased(rotated), Comparator::LessEq, 0.0, kTolAlg);
  }
  {
    const Basis comp = Basis::computational(3);
    MubFamily duplicate;
    duplicate.dim = 3;
    duplicate.bases = {comp, comp};
    add(out, "mub.duplicate_family_detector", {{"n", "3"}}, verify_unbiased(duplicate),
        Comparator::Approx, 1.0 - 1.0 / 3.0, kTolAlg);
  }
  {
    int raised = 0;
    const int composites[] = {4, 6, 9, 12};
    for (int n : composites) {
      try {
        mub_family(n);
      } catch (const Error& e) {
        if (e.code() == Errc::UnsupportedDimension) ++raised;
      }
    }
    add(out, "mub.unsupported_dimension_guard", {{"dims", "4;6;9;12"}},
        static_cast<double>(raised), Comparator::GreaterEq, 4.0, 0.0);
  }
  return out;
}

// ---------------------------------------------------------------------------
// born suite

std::vector<CheckReport> born_suite(const RunManifest& m) {
  std::vector<CheckReport> out;
  const int n = (m.n >= 3 && m.n <= kMaxDim) ? m.n : 3;
  const int samples = samples_or(m, 200);

  const auto residual_check = [&](const std::string& name, double alpha, Comparator cmp,
                                  double bound, double tol) {
    RandomSource rng = check_rng(m, name);
    const double value = born_exponent_residual(alpha, n, samples, rng);
    add(out, name,
        {{"alpha", fmt_real(alpha)}, {"n", fmt_int(n)}, {"samples", fmt_int(samples)}, {"seed", seed_str(m)}},
        value, cmp, bound, tol);
  };
  residual_check("born.residual_alpha2", 2.0, Comparator::LessEq, 0.0, 1e-10);
  residual_check("born.residual_alpha1", 1.0, Comparator::GreaterEq, 1e-3, 0.0);
  residual_check("born.residual_alpha3", 3.0, Comparator::GreaterEq, 1e-3, 0.0);
  residual_check("born.residual_alpha4", 4.0, Comparator::GreaterEq, 1e-3, 0.0);
  if (m.alpha > 0.0)
    residual_check("born.residual_alpha_user", m.alpha, Comparator::GreaterEq, 0.0, 0.0);

  {
    RandomSource rng = check_rng(m, "born.grid_minimum");
    const double grid[] = {0.5, 1.0, 1.5, 2.0, 2.5, 3.0};
    int mismatches = 0;
    for (int dim : {3, 4, 5}) {
      double best = 1e300;
      double best_alpha = 0.0;
      for (double alpha : grid) {
        const double r = born_exponent_residual(alpha, dim, samples, rng);
        if (r < best) {
          best = r;
          best_alpha = alpha;
        }
      }
      if (best_alpha != 2.0) ++mismatches;
    }
    add(out, "born.grid_minimum",
        {{"alphas", "0.5;1;1.5;2;2.5;3"}, {"dims", "3;4;5"}, {"samples", fmt_int(samples)}, {"seed", seed_str(m)}},
        static_cast<double>(mismatches), Comparator::LessEq, 0.0, 0.0);
  }
  {
    const int grid = 10000;
    add(out, "born.ode_identity_deviation", {{"grid", fmt_int(grid)}, {"epsilon", "1e-06"}},
        ode_uniqueness_check(grid), Comparator::LessEq, 0.0, 1e-6);
    add(out, "born.ode_power_family_alpha2", {{"grid", "512"}},
        power_family_ode_residual(2.0, 512), Comparator::LessEq, 0.0, 0.0);
    const double off = std::min({power_family_ode_residual(1.0, 512),
                                 power_family_ode_residual(3.0, 512),
                                 power_family_ode_residual(4.0, 512)});
    add(out, "born.ode_power_family_off_exponents", {{"alphas", "1;3;4"}, {"grid", "512"}}, off,
        Comparator::GreaterEq, 1e-3, 0.0);
  }
  add(out, "born.n2_gap_alpha2", {{"alpha", "2"}}, n2_normalization_gap(2.0), Comparator::LessEq,
      0.0, 0.0);
  add(out, "born.n2_gap_alpha1", {{"alpha", "1"}}, n2_normalization_gap(1.0), Comparator::Approx,
      std::sqrt(2.0) - 1.0, kTolAlg);
  add(out, "born.n2_gap_alpha4", {{"alpha", "4"}}, n2_normalization_gap(4.0), Comparator::Approx,
      0.5, kTolAlg);

  {
    RandomSource rng = check_rng(m, "born.fs_values");
    const PureState psi = haar_random_state(3, rng);
    const TangentVector gauge = TangentVector::at(psi, Complex(0.0, 1.0) * psi.coefficients());
    add(out, "born.fs_gauge_null", {{"n", "3"}, {"seed", seed_str(m)}}, fs_metric(gauge),
        Comparator::LessEq, 0.0, kTolAlg);

    Vec e0 = Vec::Zero(3), e1 = Vec::Zero(3);
    e0[0] = 1.0;
    e1[1] = 1.0;
    const TangentVector transverse =
        TangentVector::at(PureState::from_coefficients(e0), e1);
    add(out, "born.fs_transverse_unit", {{"n", "3"}}, fs_metric(transverse), Comparator::Approx,
        1.0, kTolAlg);
  }
  {
    RandomSource rng = check_rng(m, "born.fs_finite_difference");
    double worst = 0.0;  // |K/h^2 - g| / (g h): the ratio residual is O(h)
    for (int i = 0; i < 50; ++i) {
      const PureState psi = haar_random_state(3, rng);
      Vec d(3);
      for (int k = 0; k < 3; ++k) d[k] = rng.complex_normal();
      TangentVector v = TangentVector::at(psi, d);
      const double norm = v.components().norm();
      if (norm < 0.1) continue;
      v = TangentVector::at(psi, v.components() / norm);
      const double g = fs_metric(v);
      if (g < 0.05) continue;
      for (double h : {1e-2, 1e-3, 1e-4}) {
        const PureState moved =
            PureState::from_coefficients(psi.coefficients() + h * v.components());
        const double ratio_dev = std::abs(kernel(psi, moved) / (h * h) - g) / g;
        worst = std::max(worst, ratio_dev / h);
      }
    }
    add(out, "born.fs_finite_difference",
        {{"h", "1e-2;1e-3;1e-4"}, {"samples", "50"}, {"seed", seed_str(m)}}, worst,
        Comparator::LessEq, 1.0, 0.0);
  }
  {
    RandomSource rng = check_rng(m, "born.metric_expansion_remainder");
    double worst_c = 0.0;  // remainder R(h) <= C h^3 with one pinned constant
    for (int dim : {2, 3, 5}) {
      for (int i = 0; i < 100; ++i) {
        const PureState psi = haar_random_state(dim, rng);
        Vec d(dim);
        for (int k = 0; k < dim; ++k) d[k] = rng.complex_normal();
        TangentVector v = TangentVector::at(psi, d);
        const double norm = v.components().norm();
        if (norm < 1e-6) continue;
        v = TangentVector::at(psi, v.components() / norm);
        const double g = fs_metric(v);
        for (double h : {1e-3, 1e-4}) {
          const PureState moved =
              PureState::from_coefficients(psi.coefficients() + h * v.components());
          const double remainder = std::abs(kernel(psi, moved) - h * h * g);
          worst_c = std::max(worst_c, remainder / (h * h * h));
        }
      }
    }
    add(out, "born.metric_expansion_remainder",
        {{"dims", "2;3;5"}, {"h", "1e-3;1e-4"}, {"pairs", "100"}, {"seed", seed_str(m)}}, worst_c,
        Comparator::LessEq, 5e-3, 0.0);
  }
  {
    RandomSource rng = check_rng(m, "born.radial_restriction_identity");
    double worst = 0.0;
    for (int dim : {3, 4, 5}) {
      for (int i = 0; i < 100; ++i) {
        const PureState psi = sample_interior_state(dim, rng);
        const RealVec dx = sample_radial_direction(dim, rng);
        Vec d(dim);
        for (int k = 0; k < dim; ++k) {
          const Complex c = psi.amplitude(k);
          const double x = std::norm(c);
          d[k] = (dx[k] / (2.0 * std::sqrt(x))) * (c / std::abs(c));
        }
        const TangentVector v = TangentVector::at(psi, d);
        RealVec x(dim);
        for (int k = 0; k < dim; ++k) x[k] = std::norm(psi.amplitude(k));
        worst = std::max(worst, std::abs(fs_metric(v) - fs_metric_radial(x, dx)));
      }
    }
    add(out, "born.radial_restriction_identity",
        {{"dims", "3;4;5"}, {"samples", "100"}, {"seed", seed_str(m)}}, worst, Comparator::LessEq,
        0.0, 1e-10);
  }
  {
    RandomSource rng = check_rng(m, "born.fs_unitary_invariance");
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      const PureState psi = haar_random_state(4, rng);
      Vec d(4);
      for (int k = 0; k < 4; ++k) d[k] = rng.complex_normal();
      const TangentVector v = TangentVector::at(psi, d);
      const Unitary u = haar_random_unitary(4, rng);
      const TangentVector moved =
          TangentVector::at(u.apply(psi), u.matrix() * v.components());
      worst = std::max(worst, std::abs(fs_metric(moved) - fs_metric(v)));
    }
    add(out, "born.fs_unitary_invariance", {{"n", "4"}, {"samples", "100"}, {"seed", seed_str(m)}},
        worst, Comparator::LessEq, 0.0, kTolAlg);
  }
  {
    RealVec p(3), dp(3);
    p << 1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0;
    const double delta = 0.01;
    dp << delta, -delta, 0.0;
    add(out, "born.fr_uniform_point", {{"n", "3"}, {"delta", "0.01"}},
        std::abs(fr_metric(p, dp) - 6.0 * delta * delta), Comparator::LessEq, 0.0, kTolAlg);
    add(out, "born.fr_null_direction", {{"n", "3"}}, fr_metric(p, RealVec::Zero(3)),
        Comparator::LessEq, 0.0, 0.0);
    int guarded = 0;
    try {
      RealVec bad_p(3), bad_dp(3);
      bad_p << 0.0, 0.5, 0.5;
      bad_dp << 0.1, -0.1, 0.0;
      fr_metric(bad_p, bad_dp);
    } catch (const Error& e) {
      if (e.code() == Errc::BoundarySingularity) guarded = 1;
    }
    add(out, "born.fr_boundary_guard", {}, static_cast<double>(guarded), Comparator::GreaterEq,
        1.0, 0.0);
  }
  {
    RandomSource rng = check_rng(m, "born.distortion_alpha2");
    const double spread = dynamics_distortion(2.0, n, 50, rng);
    add(out, "born.distortion_alpha2", {{"alpha", "2"}, {"n", fmt_int(n)}, {"steps", "50"}, {"seed", seed_str(m)}},
        spread, Comparator::LessEq, 0.0, 1e-9);
  }
  {
    RandomSource rng = check_rng(m, "born.distortion_alpha3");
    int positive = 0;
    const int trials = 20;
    for (int i = 0; i < trials; ++i)
      if (dynamics_distortion(3.0, n, 50, rng) > 1e-4) ++positive;
    add(out, "born.distortion_alpha3",
        {{"alpha", "3"}, {"n", fmt_int(n)}, {"steps", "50"}, {"trials", fmt_int(trials)}, {"seed", seed_str(m)}},
        static_cast<double>(positive) / trials, Comparator::GreaterEq, 0.9, 0.0);
  }
  {
    RandomSource rng = check_rng(m, "born.distortion_zero_tangent");
    const PureState psi = sample_interior_state(n, rng);
    const double spread =
        dynamics_distortion_along_orbit(2.0, psi, Vec::Zero(n), 50, rng);
    add(out, "born.distortion_zero_tangent", {{"n", fmt_int(n)}, {"seed", seed_str(m)}}, spread,
        Comparator::LessEq, 0.0, 0.0);
  }
  return out;
}

// ---------------------------------------------------------------------------
// capacity suite

std::vector<CheckReport> capacity_suite(const RunManifest& /*manifest*/) {
  // everything here is exact arithmetic; no knobs, no randomness
  std::vector<CheckReport> out;

  {
    const auto rows = deficit_table({2, 4, 8, 16});
    const double expected_avail[] = {1.0, 2.0, 3.0, 4.0};
    const long long expected_kolm[] = {1, 3, 7, 15};
    const double expected_comb[] = {2.0, 4.0, 6.0, 8.0};
    const bool expected_feasible[] = {true, false, false, false};
    double dev = 0.0;
    int flag_mismatch = 0;
    for (int i = 0; i < 4; ++i) {
      dev = std::max({dev, std::abs(rows[i].available - expected_avail[i]),
                      std::abs(static_cast<double>(rows[i].kolm_m2 - expected_kolm[i])),
                      std::abs(rows[i].comb_m3 - expected_comb[i])});
      if (rows[i].feasible != expected_feasible[i]) ++flag_mismatch;
    }
    add(out, "capacity.table_values", {{"dims", "2;4;8;16"}}, dev, Comparator::LessEq, 0.0, 1e-9);
    add(out, "capacity.table_sole_feasible", {{"dims", "2;4;8;16"}},
        static_cast<double>(flag_mismatch), Comparator::LessEq, 0.0, 0.0);

    const std::string golden =
        "N,available,kolm_M2,comb_M3,feasible\n"
        "2,1.0,1,2,true\n"
        "4,2.0,3,4,false\n"
        "8,3.0,7,6,false\n"
        "16,4.0,15,8,false\n";
    add(out, "capacity.table_csv_golden", {{"dims", "2;4;8;16"}},
        deficit_table_csv(rows) == golden ? 0.0 : 1.0, Comparator::LessEq, 0.0, 0.0);
  }
  {
    const BitBudget b = bit_budget(3, 3);
    add(out, "capacity.qutrit_required", {{"n", "3"}, {"m", "3"}}, b.combinatorial_bits,
        Comparator::Approx, 3.169925001442312, 1e-4);
    add(out, "capacity.qutrit_available", {{"n", "3"}}, b.available_bits, Comparator::Approx,
        1.584962500721156, 1e-4);
    const Feasibility f = determinism_infeasible(3, 3, DeficitBound::Combinatorial);
    add(out, "capacity.qutrit_infeasible", {{"n", "3"}, {"m", "3"}, {"bound", "combinatorial"}},
        f.infeasible ? 1.0 : 0.0, Comparator::GreaterEq, 1.0, 0.0);
    add(out, "capacity.qutrit_margin", {{"n", "3"}, {"m", "3"}, {"bound", "combinatorial"}},
        f.margin, Comparator::Approx, 1.584962500721156, 1e-4);
  }
  {
    const Feasibility f4 = determinism_infeasible(4, 2, DeficitBound::Kolmogorov);
    add(out, "capacity.kolmogorov_n4_m2", {{"n", "4"}, {"m", "2"}, {"bound", "kolmogorov"}},
        f4.margin, Comparator::Approx, 1.0, 0.0);
    add(out, "capacity.kolmogorov_n4_m2_infeasible", {{"n", "4"}, {"m", "2"}},
        f4.infeasible ? 1.0 : 0.0, Comparator::GreaterEq, 1.0, 0.0);
    const Feasibility f2 = determinism_infeasible(2, 2, DeficitBound::Kolmogorov);
    add(out, "capacity.marginal_n2_m2_feasible", {{"n", "2"}, {"m", "2"}},
        f2.infeasible ? 1.0 : 0.0, Comparator::LessEq, 0.0, 0.0);
    add(out, "capacity.marginal_n2_m2_margin", {{"n", "2"}, {"m", "2"}}, f2.margin,
        Comparator::Approx, 0.0, 0.0);
  }
  {
    add(out, "capacity.assignment_count_33", {{"n", "3"}, {"m", "3"}},
        static_cast<double>(assignment_count(3, 3)), Comparator::Approx, 9.0, 0.0);
    add(out, "capacity.assignment_count_22", {{"n", "2"}, {"m", "2"}},
        static_cast<double>(assignment_count(2, 2)), Comparator::Approx, 2.0, 0.0);

    // Brute-force enumeration oracle: walk every map {2..M} -> {1..N} with an
    // odometer and count.
    int mismatches = 0;
    const std::pair<int, int> cases[] = {{2, 2}, {3, 3}, {4, 3}, {2, 10}, {10, 3}, {5, 5}};
    for (const auto& [cn, cm] : cases) {
      std::vector<int> odometer(static_cast<std::size_t>(cm - 1), 0);
      unsigned long long enumerated = 0;
      bool done = false;
      while (!done) {
        ++enumerated;
        std::size_t pos = 0;
        while (pos < odometer.size()) {
          if (++odometer[pos] < cn) break;
          odometer[pos] = 0;
          ++pos;
        }
        if (pos == odometer.size()) done = true;
      }
      if (enumerated != assignment_count(cn, cm)) ++mismatches;
    }
    add(out, "capacity.assignment_enumeration", {{"cases", "6"}},
        static_cast<double>(mismatches), Comparator::LessEq, 0.0, 0.0);

    int guarded = 0;
    try {
      assignment_count(10, 25);
    } catch (const Error& e) {
      if (e.code() == Errc::Overflow) guarded = 1;
    }
    add(out, "capacity.assignment_overflow_guard", {{"n", "10"}, {"m", "25"}},
        static_cast<double>(guarded), Comparator::GreaterEq, 1.0, 0.0);
  }
  {
    int violations = 0;
    double prev = -1e300;
    for (int n = 3; n <= 64; ++n) {
      const double margin = determinism_infeasible(n, 3, DeficitBound::Combinatorial).margin;
      if (margin <= prev) ++violations;
      prev = margin;
    }
    add(out, "capacity.margin_monotonic", {{"m", "3"}, {"n_range", "3..64"}},
        static_cast<double>(violations), Comparator::LessEq, 0.0, 0.0);
  }
  {
    int violations = 0;
    double prev = -1e300;
    for (int n = 3; n <= 64; ++n) {
      const BitBudget b = bit_budget(n, n + 1);
      const double ratio = static_cast<double>(b.kolmogorov_bits) / b.available_bits;
      if (ratio <= prev) ++violations;
      prev = ratio;
    }
    add(out, "capacity.entrenchment_ratio_monotonic", {{"m", "N+1"}, {"n_range", "3..64"}},
        static_cast<double>(violations), Comparator::LessEq, 0.0, 0.0);
  }
  {
    const Feasibility ks = ks_bits_infeasible(5, 3);  // five projectors, one bit each
    add(out, "capacity.ks_bits_qutrit", {{"projectors", "5"}, {"n", "3"}},
        ks.infeasible ? ks.margin : -1.0, Comparator::GreaterEq, 3.4, 0.0);
  }
  {
    double dev = 0.0;
    for (int n : {2, 3, 7, 16, 64})
      for (int mm : {2, 3, 5, 17}) {
        const BitBudget b = bit_budget(n, mm);
        dev = std::max(dev, std::abs(b.combinatorial_bits - (mm - 1) * b.available_bits));
        dev = std::max(dev, std::abs(static_cast<double>(b.kolmogorov_bits -
                                                         static_cast<long long>(mm - 1) * (n - 1))));
      }
    add(out, "capacity.bit_budget_formulas", {{"cases", "20"}}, dev, Comparator::LessEq, 0.0,
        kTolAlg);
  }
  return out;
}

// ---------------------------------------------------------------------------
// compose suite

std::vector<CheckReport> compose_suite(const RunManifest& m) {
  std::vector<CheckReport> out;
  const int samples = samples_or(m, 1000);

  {
    RandomSource rng = check_rng(m, "compose.law");
    const CompositionLawStats stats = composition_law_tests(samples, rng);
    const Params p = {{"samples", fmt_int(samples)}, {"seed", seed_str(m)}};
    add(out, "compose.boundary", p, stats.boundary_dev, Comparator::LessEq, 0.0, kTolAlg);
    add(out, "compose.symmetry", p, stats.symmetry_dev, Comparator::LessEq, 0.0, kTolAlg);
    add(out, "compose.associativity", p, stats.associativity_dev, Comparator::LessEq, 0.0,
        kTolAlg);
    add(out, "compose.max_candidate_detected", p, stats.max_candidate_violation,
        Comparator::GreaterEq, 1e-3, 0.0);
  }
  {
    RandomSource rng = check_rng(m, "compose.product_factorization");
    double worst = 0.0;
    for (const auto& [na, nb] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 3}}) {
      for (int i = 0; i < samples / 3 + 1; ++i) {
        const PureState x = haar_random_state(na, rng);
        const PureState y = haar_random_state(na, rng);
        const PureState u = haar_random_state(nb, rng);
        const PureState v = haar_random_state(nb, rng);
        const double joint = kernel(tensor_state(x, u).joint, tensor_state(y, v).joint);
        worst = std::max(worst, std::abs(joint - kernel_compose(kernel(x, y), kernel(u, v))));
      }
    }
    add(out, "compose.product_factorization",
        {{"dims", "2x2;2x3;3x3"}, {"samples", fmt_int(samples)}, {"seed", seed_str(m)}}, worst,
        Comparator::LessEq, 0.0, kTolAlg);
  }
  {
    const CompositeState joint =
        tensor_state(PureState::basis_vector(2, 0), PureState::basis_vector(2, 1));
    Vec e1 = Vec::Zero(4);
    e1[1] = 1.0;
    add(out, "compose.tensor_basis_product", {{"dims", "2x2"}},
        (joint.joint.coefficients() - e1).cwiseAbs().maxCoeff(), Comparator::LessEq, 0.0, kTolAlg);
    add(out, "compose.tensor_capacity", {{"dims", "2x2"}},
        std::abs(static_cast<double>(joint.joint.dim() - 4)), Comparator::LessEq, 0.0, 0.0);
    add(out, "compose.bell_schmidt_rank", {{"dims", "2x2"}},
        static_cast<double>(schmidt_rank(bell_state())), Comparator::Approx, 2.0, 0.0);
    add(out, "compose.product_schmidt_rank", {{"dims", "2x2"}},
        static_cast<double>(schmidt_rank(joint)), Comparator::Approx, 1.0, 0.0);
  }
  {
    const TomographyRank c22 = local_tomography_rank(2, 2, OperatorField::Complex);
    add(out, "compose.tomography_22_complex", {{"full_dim", fmt_int(c22.full_dim)}},
        static_cast<double>(c22.rank), Comparator::Approx, 16.0, 0.0);
    const TomographyRank r22 = local_tomography_rank(2, 2, OperatorField::Real);
    add(out, "compose.tomography_22_real", {{"full_dim", fmt_int(r22.full_dim)}},
        static_cast<double>(r22.rank), Comparator::Approx, 9.0, 0.0);
    const TomographyRank c23 = local_tomography_rank(2, 3, OperatorField::Complex);
    add(out, "compose.tomography_23_complex", {{"full_dim", fmt_int(c23.full_dim)}},
        static_cast<double>(c23.rank), Comparator::Approx, 36.0, 0.0);
    const TomographyRank c33 = local_tomography_rank(3, 3, OperatorField::Complex);
    add(out, "compose.tomography_33_complex", {{"full_dim", fmt_int(c33.full_dim)}},
        static_cast<double>(c33.rank), Comparator::Approx, 81.0, 0.0);
  }
  {
    const double s = chsh_value(bell_state(), 0.0, kPi / 4.0, kPi / 8.0, -kPi / 8.0);
    add(out, "compose.chsh_bell_canonical", {{"angles", "0;pi/4;pi/8;-pi/8"}}, s,
        Comparator::Approx, 2.0 * std::sqrt(2.0), 1e-10);
  }
  {
    RandomSource rng = check_rng(m, "compose.chsh_tsirelson_sweep");
    const int draws = std::max(samples, 10000);
    double worst = 0.0;
    for (int i = 0; i < draws; ++i) {
      const CompositeState state = composite_state(2, 2, haar_random_state(4, rng));
      const double s =
          chsh_value(state, rng.uniform(0.0, kPi), rng.uniform(0.0, kPi), rng.uniform(0.0, kPi),
                     rng.uniform(0.0, kPi));
      worst = std::max(worst, std::abs(s));
    }
    add(out, "compose.chsh_tsirelson_sweep", {{"draws", fmt_int(draws)}, {"seed", seed_str(m)}},
        worst, Comparator::LessEq, 2.0 * std::sqrt(2.0), 1e-9);
  }
  {
    const CompositeState product =
        tensor_state(PureState::basis_vector(2, 0), PureState::basis_vector(2, 0));
    double worst = 0.0;
    const int per_axis = 10;  // 10^4 grid points
    for (int ia = 0; ia < per_axis; ++ia)
      for (int ib = 0; ib < per_axis; ++ib)
        for (int ic = 0; ic < per_axis; ++ic)
          for (int id = 0; id < per_axis; ++id) {
            const double s = chsh_value(product, kPi * ia / per_axis, kPi * ib / per_axis,
                                        kPi * ic / per_axis, kPi * id / per_axis);
            worst = std::max(worst, std::abs(s));
          }
    add(out, "compose.chsh_product_grid", {{"grid", "10^4"}}, worst, Comparator::LessEq, 2.0,
        1e-9);
  }
  {
    double worst = 0.0;
    for (int bits = 0; bits < 16; ++bits) {
      const double a = (bits & 1) ? 1.0 : -1.0;
      const double a2 = (bits & 2) ? 1.0 : -1.0;
      const double b = (bits & 4) ? 1.0 : -1.0;
      const double b2 = (bits & 8) ? 1.0 : -1.0;
      worst = std::max(worst, std::abs(a * b + a * b2 + a2 * b - a2 * b2));
    }
    add(out, "compose.chsh_deterministic_bound", {{"assignments", "16"}}, worst,
        Comparator::LessEq, 2.0, 0.0);
  }
  {
    RandomSource rng = check_rng(m, "compose.measurement");
    double calib_dev = 0.0, born_dev = 0.0, sum_dev = 0.0;
    for (int n : {2, 3, 5}) {
      const Unitary u = measurement_model_unitary(n);
      for (int k = 0; k < n; ++k) {
        const CompositeState in =
            tensor_state(PureState::basis_vector(n, k), PureState::basis_vector(n, 0));
        const CompositeState expect =
            tensor_state(PureState::basis_vector(n, k), PureState::basis_vector(n, k));
        calib_dev = std::max(calib_dev, (u.matrix() * in.joint.coefficients() -
                                         expect.joint.coefficients())
                                            .cwiseAbs()
                                            .maxCoeff());
      }
      for (int i = 0; i < 100; ++i) {
        const PureState psi = haar_random_state(n, rng);
        const MeasurementOutcome outcome = measurement_interaction(psi);
        for (int k = 0; k < n; ++k)
          born_dev = std::max(born_dev, std::abs(outcome.branch_affinities[k] -
                                                 std::norm(psi.amplitude(k))));
        sum_dev = std::max(sum_dev, std::abs(outcome.branch_affinities.sum() - 1.0));
      }
    }
    add(out, "compose.measurement_calibration", {{"dims", "2;3;5"}}, calib_dev,
        Comparator::LessEq, 0.0, kTolAlg);
    add(out, "compose.measurement_born", {{"dims", "2;3;5"}, {"states", "100"}, {"seed", seed_str(m)}},
        born_dev, Comparator::LessEq, 0.0, kTolAlg);
    add(out, "compose.measurement_affinity_sum", {{"dims", "2;3;5"}}, sum_dev, Comparator::LessEq,
        0.0, kTolAlg);

    const MeasurementOutcome pointer = measurement_interaction(PureState::basis_vector(3, 2));
    RealVec delta = RealVec::Zero(3);
    delta[2] = 1.0;
    add(out, "compose.measurement_basis_state", {{"n", "3"}, {"k", "2"}},
        (pointer.branch_affinities - delta).cwiseAbs().maxCoeff(), Comparator::LessEq, 0.0,
        kTolAlg);

    Vec c(3);
    c << 1.0, 1.0, 1.0;
    const MeasurementOutcome uniform =
        measurement_interaction(PureState::from_coefficients(c));
    add(out, "compose.measurement_qutrit_uniform", {{"n", "3"}},
        (uniform.branch_affinities.array() - 1.0 / 3.0).abs().maxCoeff(), Comparator::LessEq, 0.0,
        kTolAlg);
  }
  {
    add(out, "compose.no_cloning_endpoints", {{"s", "0;1"}},
        std::max(no_cloning_gap(0.0), no_cloning_gap(1.0)), Comparator::LessEq, 0.0, 0.0);
    add(out, "compose.no_cloning_half", {{"s", "0.5"}}, no_cloning_gap(0.5), Comparator::Approx,
        0.25, kTolAlg);
    double least = 1e300;
    for (int i = 1; i <= 19; ++i) {
      const double r = 0.05 * i;
      for (int j = 0; j < 8; ++j) {
        const double phi = 2.0 * kPi * j / 8;
        least = std::min(least, no_cloning_gap(r * Complex(std::cos(phi), std::sin(phi))));
      }
    }
    add(out, "compose.no_cloning_interior_positive", {{"radius", "0.05..0.95"}}, least,
        Comparator::GreaterEq, 2e-3, 0.0);
  }
  {
    RandomSource rng = check_rng(m, "compose.entropic");
    double min_slack = 1e300;
    double basis_dev = 0.0;
    for (int n : {2, 3, 5}) {
      const MubFamily family = mub_family(n);
      const Basis& b1 = family.bases[0];
      const Basis& b2 = family.bases[1];
      const double bound = std::log2(static_cast<double>(n));
      for (int i = 0; i < 1000; ++i) {
        const EntropicUncertainty e =
            entropic_uncertainty_check(haar_random_state(n, rng), b1, b2);
        min_slack = std::min(min_slack, e.entropy_sum - bound);
      }
      const EntropicUncertainty basis_case = entropic_uncertainty_check(b1.vector(0), b1, b2);
      basis_dev = std::max(basis_dev, std::abs(basis_case.entropy_sum - bound));
    }
    add(out, "compose.entropic_bound_sweep",
        {{"dims", "2;3;5"}, {"states", "1000"}, {"seed", seed_str(m)}}, min_slack,
        Comparator::GreaterEq, 0.0, 1e-9);
    add(out, "compose.entropic_basis_state", {{"dims", "2;3;5"}}, basis_dev, Comparator::LessEq,
        0.0, 1e-9);

    int guarded = 0;
    try {
      const Basis comp = Basis::computational(3);
      entropic_uncertainty_check(comp.vector(0), comp, comp);
    } catch (const Error& e) {
      if (e.code() == Errc::NotUnbiased) guarded = 1;
    }
    add(out, "compose.entropic_unbiased_guard", {}, static_cast<double>(guarded),
        Comparator::GreaterEq, 1.0, 0.0);
  }
  {
    const CapacityDilution lone = capacity_dilution(2, 1);
    add(out, "compose.dilution_isolated_qubit", {{"ns", "2"}, {"ne", "1"}},
        lone.nontrivial_dynamics ? 1.0 : 0.0, Comparator::LessEq, 0.0, 0.0);
    const CapacityDilution ten = capacity_dilution(2, 5);
    add(out, "compose.dilution_scaling_degrees", {{"ns", "2"}, {"ne", "5"}},
        ten.delta_phi * 180.0 / kPi, Comparator::Approx, 36.0, 1e-9);
    const CapacityDilution four = capacity_dilution(2, 2);
    add(out, "compose.dilution_threshold", {{"ns", "2"}, {"ne", "2"}},
        four.nontrivial_dynamics ? 1.0 : 0.0, Comparator::GreaterEq, 1.0, 0.0);
  }
  return out;
}

// ---------------------------------------------------------------------------
// sampling suite

std::vector<CheckReport> sampling_suite(const RunManifest& m) {
  std::vector<CheckReport> out;

  {
    double identity_dev = 0.0, doubling_dev = 0.0;
    for (int n = 1; n <= 64; ++n) {
      const GranularityRecord g = granularity(n, 1.0);
      identity_dev = std::max(identity_dev, std::abs(g.delta_theta * n - 2.0 * kPi));
      if (n <= 32)
        doubling_dev = std::max(doubling_dev, std::abs(granularity(2 * n, 1.0).delta_theta -
                                                       g.delta_theta / 2.0));
    }
    add(out, "sampling.granularity_identity", {{"n_range", "1..64"}}, identity_dev,
        Comparator::LessEq, 0.0, kTolAlg);
    add(out, "sampling.granularity_doubling", {{"n_range", "1..32"}}, doubling_dev,
        Comparator::LessEq, 0.0, kTolAlg);
    add(out, "sampling.granularity_n3", {{"n", "3"}},
        std::abs(granularity(3, 1.0).delta_theta - 2.0 * kPi / 3.0), Comparator::LessEq, 0.0,
        kTolAlg);
    add(out, "sampling.granularity_n10_degrees", {{"n", "10"}},
        granularity(10, 1.0).delta_theta * 180.0 / kPi, Comparator::Approx, 36.0, kTolAlg);
    const GranularityRecord g3 = granularity(3, 6.0);
    add(out, "sampling.granularity_time_step", {{"n", "3"}, {"period", "6"}},
        std::abs(g3.min_time_step - 2.0), Comparator::LessEq, 0.0, kTolAlg);
    add(out, "sampling.granularity_energy_ceiling", {{"n", "3"}, {"period", "6"}},
        std::abs(g3.energy_ceiling - 3.0 * 2.0 * kPi / 6.0), Comparator::LessEq, 0.0, kTolAlg);
  }
  {
    RandomSource rng = check_rng(m, "sampling.indistinguishability");
    const int trials = samples_or(m, 1000);
    double worst_excess = -1e300;
    int overlap_violations = 0;
    for (int n : {3, 4, 8}) {
      const PureState psi = haar_random_state(n, rng);
      const IndistinguishabilityResult r =
          indistinguishability_bound_check(psi, 0.5 / n, trials, rng);
      worst_excess = std::max(worst_excess, r.max_kernel - r.bound);
      overlap_violations += r.overlap_bound_violations;
    }
    add(out, "sampling.indistinguishability_bound",
        {{"dims", "3;4;8"}, {"eps", "1/(2N)"}, {"trials", fmt_int(trials)}, {"seed", seed_str(m)}},
        worst_excess, Comparator::LessEq, 0.0, 0.0);
    add(out, "sampling.overlap_lower_bound",
        {{"dims", "3;4;8"}, {"trials", fmt_int(trials)}, {"seed", seed_str(m)}},
        static_cast<double>(overlap_violations), Comparator::LessEq, 0.0, 0.0);

    const IndistinguishabilityResult frozen =
        indistinguishability_bound_check(haar_random_state(4, rng), 0.0, 10, rng);
    add(out, "sampling.indistinguishability_zero_eps", {{"n", "4"}, {"seed", seed_str(m)}},
        frozen.max_kernel, Comparator::LessEq, 0.0, kTolAlg);
  }
  {
    const ZenoScaling scaling = zeno_scaling_exponent(1.0, 1.0);
    add(out, "sampling.zeno_exponent", {{"dims", "8;16;32;64"}, {"delta_e", "1"}, {"period", "1"}},
        scaling.exponent, Comparator::Approx, -2.0, 0.1);
    add(out, "sampling.zeno_stationary", {{"n", "16"}, {"delta_e", "0"}},
        zeno_step_flip_probability(16, 0.0, 1.0), Comparator::LessEq, 0.0, kTolAlg);
  }
  {
    double worst_ratio = 0.0;
    double min_gap = 1e300;
    int monotone_violations = 0;
    double prev_floor = 1e300;
    for (int n = 2; n <= 64; ++n) {
      const EntropyFloor f = entropy_floor_check(n);
      worst_ratio = std::max(worst_ratio, f.operational_min_bits / f.floor_bits);
      min_gap = std::min(min_gap, f.operational_min_bits - f.floor_bits);
      if (n >= 3) {
        if (f.floor_bits >= prev_floor && n > 3) ++monotone_violations;
        prev_floor = f.floor_bits;
      }
    }
    add(out, "sampling.entropy_floor_ratio", {{"n_range", "2..64"}}, worst_ratio,
        Comparator::LessEq, 4.0, 0.0);
    add(out, "sampling.entropy_floor_above", {{"n_range", "2..64"}}, min_gap,
        Comparator::GreaterEq, 0.0, kTolAlg);
    add(out, "sampling.entropy_floor_monotone", {{"n_range", "3..64"}},
        static_cast<double>(monotone_violations), Comparator::LessEq, 0.0, 0.0);

    const EntropyFloor f4 = entropy_floor_check(4);
    add(out, "sampling.entropy_floor_n4_floor", {{"n", "4"}}, f4.floor_bits, Comparator::Approx,
        0.5, kTolAlg);
    add(out, "sampling.entropy_floor_n4_operational", {{"n", "4"}}, f4.operational_min_bits,
        Comparator::Approx, 0.8112781244591328, kTolAlg);

    RealVec delta = RealVec::Zero(4);
    delta[0] = 1.0;
    add(out, "sampling.pure_delta_entropy", {{"n", "4"}}, entropy_bits(delta),
        Comparator::LessEq, 0.0, 0.0);
  }
  {
    const MubFamily family = mub_family(3);
    const Basis& b1 = family.bases[0];
    const Basis& b2 = family.bases[1];
    RealVec p1 = RealVec::Zero(3);
    p1[0] = 1.0;
    const RealVec p2 = RealVec::Constant(3, 1.0 / 3.0);
    const Reconstruction r = try_reconstruct_from_two_bases(p1, p2, b1, b2);
    const double fid = fidelity(r.estimate, b1.vector(0));
    add(out, "sampling.reconstruction_basis_state", {{"n", "3"}},
        std::max(r.residual, 1.0 - fid), Comparator::LessEq, 0.0, kTolAlg);
  }
  {
    RandomSource rng = check_rng(m, "sampling.reconstruction_sweep");
    const int trials = samples_or(m, 1000);
    const MubFamily family = mub_family(3);
    const Basis& b1 = family.bases[0];
    const Basis& b2 = family.bases[1];

    int feasible = 0;
    int recovered = 0;       // estimate matches the generating state
    int ambiguous = 0;       // a distinct exact solution was found as well
    int unexplained = 0;     // wrong estimate with no partner in hand
    int infeasible = 0;
    double worst_residual = 0.0;
    double min_unique_fidelity = 1.0;
    double exemplar_fidelity = -1.0;
    double exemplar_kernel = -1.0;
    for (int i = 0; i < trials; ++i) {
      const PureState truth = haar_random_state(3, rng);
      const Reconstruction r =
          try_reconstruct_from_two_bases(affinities(truth, b1), affinities(truth, b2), b1, b2);
      if (!r.feasible) {
        ++infeasible;
        continue;
      }
      ++feasible;
      worst_residual = std::max(worst_residual, r.residual);
      const double fid = fidelity(r.estimate, truth);
      if (fid > 1.0 - 1e-8) ++recovered;
      if (r.ambiguous()) {
        ++ambiguous;
        if (exemplar_fidelity < 0.0) {
          exemplar_fidelity = fid;
          exemplar_kernel = kernel(r.estimate, r.alternates.front());
        }
      } else {
        min_unique_fidelity = std::min(min_unique_fidelity, fid);
        if (fid <= 1.0 - 1e-8) ++unexplained;
      }
    }
    const Params p = {{"n", "3"},
                      {"trials", fmt_int(trials)},
                      {"infeasible", fmt_int(infeasible)},
                      {"ambiguous", fmt_int(ambiguous)},
                      {"seed", seed_str(m)}};
    add(out, "sampling.reconstruction_feasible_rate", p, static_cast<double>(feasible) / trials,
        Comparator::GreaterEq, 0.99, 0.0);
    add(out, "sampling.reconstruction_data_residual", p, worst_residual, Comparator::LessEq, 0.0,
        kReconTol);
    // When the data pins the state down uniquely, recovery is exact.
    add(out, "sampling.reconstruction_unique_case_fidelity", p, min_unique_fidelity,
        Comparator::GreaterEq, 1.0 - 1e-8, 0.0);
    // Every miss must come with a demonstrated second exact solution: the
    // two-basis data itself is ambiguous for these states (discrete partner
    // states with identical statistics in both bases).
    add(out, "sampling.reconstruction_unexplained_failures", p,
        static_cast<double>(unexplained), Comparator::LessEq, 0.0, 0.0);
    Params data = p;
    data["exemplar_fidelity"] = fmt_real(exemplar_fidelity);
    data["exemplar_partner_kernel"] = fmt_real(exemplar_kernel);
    add(out, "sampling.reconstruction_truth_recovery_rate", data,
        static_cast<double>(recovered) / trials, Comparator::GreaterEq, 0.0, 0.0);
    add(out, "sampling.reconstruction_ambiguity_rate", data,
        static_cast<double>(ambiguous) / trials, Comparator::GreaterEq, 0.0, 0.0);
  }
  {
    const AmbiguityScan scan = two_basis_ambiguity_scan_n2(1000, 6283);
    add(out, "sampling.ambiguity_scan_n2",
        {{"p_steps", "1000"},
         {"phase_steps", "6283"},
         {"states", fmt_int(scan.states_scanned)},
         {"max_kernel", fmt_real(scan.max_kernel)}},
        static_cast<double>(scan.pairs_found), Comparator::GreaterEq, 1.0, 0.0);
  }
  {
    RandomSource rng = check_rng(m, "sampling.audit");
    long long counterexamples = 0;
    long long agreements = 0;
    for (int n : {2, 3, 5}) {
      const int trials = (n == 3) ? samples_or(m, 10000) : 3000;
      const AuditSummary summary = two_basis_sufficiency_audit(n, trials, rng);
      counterexamples += static_cast<long long>(summary.counterexamples.size());
      agreements += summary.stat_agreements;
    }
    add(out, "sampling.audit_counterexample_count",
        {{"dims", "2;3;5"}, {"agreements", fmt_int(agreements)}, {"seed", seed_str(m)}},
        static_cast<double>(counterexamples), Comparator::GreaterEq, 0.0, 0.0);

    const PureState x = haar_random_state(3, rng);
    const MubFamily family = mub_family(3);
    const double self_kernel = kernel(x, x);
    add(out, "sampling.audit_identical_states", {{"n", "3"}, {"seed", seed_str(m)}}, self_kernel,
        Comparator::LessEq, 0.0, kTolAlg);

    Vec up(2), down(2);
    up << 1.0, Complex(0.0, 1.0);
    down << 1.0, Complex(0.0, -1.0);
    const MubFamily f2 = mub_family(2);
    const bool flagged = audit_pair(PureState::from_coefficients(up),
                                    PureState::from_coefficients(down), f2.bases[0], f2.bases[1]);
    add(out, "sampling.audit_constructed_pair", {{"n", "2"}}, flagged ? 1.0 : 0.0,
        Comparator::GreaterEq, 1.0, 0.0);

    // Qutrit cross-check: a reconstruction-discovered partner pair must be
    // flagged by the audit as well.
    const MubFamily f3 = mub_family(3);
    double qutrit_flagged = 0.0;
    for (int i = 0; i < 50 && qutrit_flagged == 0.0; ++i) {
      const PureState truth = haar_random_state(3, rng);
      const Reconstruction r = try_reconstruct_from_two_bases(
          affinities(truth, f3.bases[0]), affinities(truth, f3.bases[1]), f3.bases[0],
          f3.bases[1]);
      if (r.feasible && r.ambiguous() &&
          audit_pair(r.estimate, r.alternates.front(), f3.bases[0], f3.bases[1]))
        qutrit_flagged = 1.0;
    }
    add(out, "sampling.audit_qutrit_partner", {{"n", "3"}, {"seed", seed_str(m)}}, qutrit_flagged,
        Comparator::GreaterEq, 1.0, 0.0);
  }
  return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"kernel", "dynamics", "mub",    "born",
                                                 "capacity", "compose",  "sampling"};
  return names;
}

std::vector<CheckReport> run_suite(const std::string& suite, const RunManifest& manifest) {
  std::vector<CheckReport> reports;
  if (suite == "kernel")
    reports = kernel_suite(manifest);
  else if (suite == "dynamics")
    reports = dynamics_suite(manifest);
  else if (suite == "mub")
    reports = mub_suite(manifest);
  else if (suite == "born")
    reports = born_suite(manifest);
  else if (suite == "capacity")
    reports = capacity_suite(manifest);
  else if (suite == "compose")
    reports = compose_suite(manifest);
  else if (suite == "sampling")
    reports = sampling_suite(manifest);
  else if (suite == "all") {
    for (const auto& name : suite_names()) {
      auto part = run_suite(name, manifest);
      reports.insert(reports.end(), part.begin(), part.end());
    }
  } else {
    raise(Errc::UnknownSuite, "unknown suite: " + suite);
  }
  if (manifest.inject_failure && suite != "all")
    reports.push_back(make_check("zz_injected_failure", {{"hook", "inject-failure"}}, 1.0,
                                 Comparator::LessEq, 0.0, 0.0));
  sort_reports(reports);
  return reports;
}

QutritWalkthrough qutrit_walkthrough() {
  QutritWalkthrough w;
  const BitBudget budget = bit_budget(3, 3);
  const MubFamily family = mub_family(3);

  Vec c(3);
  c << 1.0, 1.0, 1.0;
  const PureState equal = PureState::from_coefficients(c);
  const RealVec p = affinities(equal, Basis::computational(3));

  Eigen::ComplexEigenSolver<Mat> es(cyclic_generator(3).permutation.matrix());
  double eigen_dev = 0.0;
  std::vector<Complex> roots;
  for (int k = 0; k < 3; ++k) {
    const double angle = 2.0 * kPi * k / 3.0;
    roots.emplace_back(std::cos(angle), std::sin(angle));
    double best = 1e300;
    for (int j = 0; j < 3; ++j) best = std::min(best, std::abs(es.eigenvalues()[j] - roots[k]));
    eigen_dev = std::max(eigen_dev, best);
  }

  w.checks.push_back(make_check("walkthrough.mub_count", {{"n", "3"}},
                                static_cast<double>(family.size()), Comparator::Approx, 4.0,
                                0.0));
  w.checks.push_back(make_check("walkthrough.deficit_required", {{"n", "3"}, {"m", "3"}},
                                budget.combinatorial_bits, Comparator::Approx, 3.169925001442312,
                                1e-4));
  w.checks.push_back(make_check("walkthrough.deficit_available", {{"n", "3"}},
                                budget.available_bits, Comparator::Approx, 1.584962500721156,
                                1e-4));
  w.checks.push_back(make_check("walkthrough.equal_superposition_affinities", {{"n", "3"}},
                                (p.array() - 1.0 / 3.0).abs().maxCoeff(), Comparator::LessEq, 0.0,
                                kTolAlg));
  w.checks.push_back(make_check("walkthrough.cyclic_eigenvalues", {{"n", "3"}}, eigen_dev,
                                Comparator::LessEq, 0.0, kTolAlg));
  sort_reports(w.checks);

  char line[256];
  w.text += "Qutrit (N = 3) walkthrough\n";
  std::snprintf(line, sizeof line, "  capacity:             log2 3 = %.4f bits\n",
                budget.available_bits);
  w.text += line;
  std::snprintf(line, sizeof line,
                "  determinism at M = 3: 2 log2 3 = %.4f bits required > %.4f available\n",
                budget.combinatorial_bits, budget.available_bits);
  w.text += line;
  std::snprintf(line, sizeof line, "  unbiased bases:       %d (worst deviation %.2e)\n",
                family.size(), verify_unbiased(family));
  w.text += line;
  std::snprintf(line, sizeof line,
                "  equal superposition:  affinities (%.6f, %.6f, %.6f)\n", p[0], p[1], p[2]);
  w.text += line;
  w.text += "  cyclic eigenvalues:   1, e^{2 pi i/3}, e^{4 pi i/3}\n";
  bool all_pass = true;
  for (const auto& chk : w.checks) all_pass = all_pass && chk.pass;
  w.text += all_pass ? "  all walkthrough checks pass\n" : "  WALKTHROUGH CHECK FAILED\n";

  nlohmann::ordered_json j;
  j["capacity_bits"] = budget.available_bits;
  j["required_bits_m3"] = budget.combinatorial_bits;
  j["mub_count"] = family.size();
  j["equal_superposition_affinities"] = {p[0], p[1], p[2]};
  nlohmann::ordered_json eigs = nlohmann::ordered_json::array();
  for (const auto& r : roots) eigs.push_back({r.real(), r.imag()});
  j["cyclic_eigenvalues"] = eigs;
  j["checks"] = nlohmann::ordered_json::parse(reports_to_json(w.checks));
  w.json = j.dump(2) + "\n";
  return w;
}

}  // namespace qklab
