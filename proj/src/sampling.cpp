#include "sampling.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "dynamics.hpp"

namespace qklab {

namespace {

struct PhaseProblem {
  Mat overlaps;            // <b2_j | b1_k>
  RealVec moduli;          // sqrt(p1)
  RealVec target;          // p2
  std::vector<int> free_k; // indices with adjustable phase (anchor excluded)
  int anchor = -1;
};

Vec assemble(const PhaseProblem& prob, const RealVec& phases) {
  Vec c(prob.moduli.size());
  for (Eigen::Index k = 0; k < prob.moduli.size(); ++k) c[k] = prob.moduli[k];
  for (std::size_t i = 0; i < prob.free_k.size(); ++i) {
    const int k = prob.free_k[i];
    c[k] = prob.moduli[k] * Complex(std::cos(phases[static_cast<Eigen::Index>(i)]),
                                    std::sin(phases[static_cast<Eigen::Index>(i)]));
  }
  return c;
}

RealVec predicted_stats(const PhaseProblem& prob, const Vec& c) {
  const Vec w = prob.overlaps * c;
  RealVec q(w.size());
  for (Eigen::Index j = 0; j < w.size(); ++j) q[j] = std::norm(w[j]);
  return q;
}

double misfit(const PhaseProblem& prob, const RealVec& phases) {
  const RealVec q = predicted_stats(prob, assemble(prob, phases));
  return (q - prob.target).squaredNorm();
}

// Levenberg-Marquardt on the residual q_j(phi) - target_j with the analytic
// Jacobian dq_j/dphi_i = 2 Re(conj(w_j) i M_jk c_k).
RealVec refine_phases(const PhaseProblem& prob, RealVec phases) {
  const auto nf = static_cast<Eigen::Index>(prob.free_k.size());
  if (nf == 0) return phases;
  const Eigen::Index n = prob.target.size();
  double lambda = 1e-3;
  double current = misfit(prob, phases);

  for (int iter = 0; iter < 200; ++iter) {
    const Vec c = assemble(prob, phases);
    const Vec w = prob.overlaps * c;
    RealVec resid(n);
    for (Eigen::Index j = 0; j < n; ++j) resid[j] = std::norm(w[j]) - prob.target[j];

    RealMat jac(n, nf);
    for (Eigen::Index i = 0; i < nf; ++i) {
      const int k = prob.free_k[static_cast<std::size_t>(i)];
      for (Eigen::Index j = 0; j < n; ++j) {
        const Complex dw = prob.overlaps(j, k) * c[k] * Complex(0.0, 1.0);
        jac(j, i) = 2.0 * (std::conj(w[j]) * dw).real();
      }
    }

    const RealMat jtj = jac.transpose() * jac;
    const RealVec jtr = jac.transpose() * resid;
    bool stepped = false;
    for (int attempt = 0; attempt < 12; ++attempt) {
      RealMat damped = jtj;
      damped.diagonal().array() += lambda;
      const RealVec delta = damped.ldlt().solve(-jtr);
      const RealVec trial = phases + delta;
      const double trial_misfit = misfit(prob, trial);
      if (trial_misfit < current) {
        phases = trial;
        current = trial_misfit;
        lambda = std::max(lambda * 0.3, 1e-12);
        stepped = true;
        break;
      }
      lambda *= 10.0;
    }
    if (!stepped || current < 1e-26) break;
  }
  return phases;
}

}  // namespace

GranularityRecord granularity(int n, double period) {
  if (n < 1 || period <= 0.0) raise(Errc::InvalidArgument, "granularity needs N >= 1 and T > 0");
  GranularityRecord g;
  g.n = n;
  g.delta_theta = 2.0 * kPi / n;
  g.min_time_step = period / n;
  g.energy_ceiling = n * 2.0 * kPi / period;
  return g;
}

IndistinguishabilityResult indistinguishability_bound_check(const PureState& psi, double eps,
                                                            int trials, RandomSource& rng) {
  const int n = psi.dim();
  if (eps < 0.0 || eps >= 1.0 / n)
    raise(Errc::InvalidArgument, "perturbation scale must satisfy 0 <= eps < 1/N");
  if (trials < 1) raise(Errc::InvalidArgument, "need at least one trial");

  IndistinguishabilityResult result;
  result.bound = 2.0 / n;
  const Vec& c = psi.coefficients();
  for (int t = 0; t < trials; ++t) {
    Vec perturbed = c;
    for (int k = 0; k < n; ++k) {
      const double radius = eps * std::sqrt(rng.uniform());
      const double angle = rng.uniform(0.0, 2.0 * kPi);
      perturbed[k] += radius * Complex(std::cos(angle), std::sin(angle));
    }
    perturbed /= perturbed.norm();

    const double diff_sq = (c - perturbed).squaredNorm();
    const double overlap = std::abs(c.dot(perturbed));
    if (overlap < 1.0 - diff_sq - kTolAlg) ++result.overlap_bound_violations;

    const double k = clamp01(1.0 - overlap * overlap);
    result.max_kernel = std::max(result.max_kernel, k);
    if (k > result.bound + kTolAlg) ++result.kernel_violations;
  }
  return result;
}

Reconstruction try_reconstruct_from_two_bases(const RealVec& p1, const RealVec& p2,
                                              const Basis& b1, const Basis& b2) {
  const int n = b1.dim();
  if (b2.dim() != n || p1.size() != n || p2.size() != n)
    raise(Errc::DimensionMismatch, "probability/basis dimension mismatch");
  for (Eigen::Index k = 0; k < p1.size(); ++k)
    if (p1[k] < -kTolAlg || p2[k] < -kTolAlg)
      raise(Errc::InvalidArgument, "probabilities must be non-negative");
  if (std::abs(p1.sum() - 1.0) > 1e-6 || std::abs(p2.sum() - 1.0) > 1e-6)
    raise(Errc::InvalidArgument, "probability vectors must be normalized");
  const double target = 1.0 / n;
  const Mat cross = b2.matrix().adjoint() * b1.matrix();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (std::abs(std::norm(cross(i, j)) - target) > 1e-9)
        raise(Errc::NotUnbiased, "reconstruction bases must be mutually unbiased");

  PhaseProblem prob;
  prob.overlaps = cross;
  prob.target = p2;
  prob.moduli = RealVec(n);
  for (int k = 0; k < n; ++k) prob.moduli[k] = std::sqrt(std::max(p1[k], 0.0));
  for (int k = 0; k < n; ++k) {
    if (prob.moduli[k] <= 1e-9) continue;
    if (prob.anchor < 0)
      prob.anchor = k;
    else
      prob.free_k.push_back(k);
  }
  if (prob.anchor < 0) raise(Errc::InvalidArgument, "first-basis statistics are all zero");

  const auto nf = static_cast<int>(prob.free_k.size());
  RealVec best_phases = RealVec::Zero(nf);
  double best = misfit(prob, best_phases);

  // Multi-start: a full 16-point grid per free phase while that stays small,
  // otherwise a deterministic pseudo-random start set of the same size.
  const int grid = 16;
  long long starts = 1;
  for (int i = 0; i < nf && starts <= 65536; ++i) starts *= grid;
  const bool exhaustive = nf <= 4;
  const long long total = exhaustive ? starts : 65536;
  std::vector<std::pair<double, RealVec>> ranked;
  for (long long s = 0; s < total; ++s) {
    RealVec phases(nf);
    if (exhaustive) {
      long long rem = s;
      for (int i = 0; i < nf; ++i) {
        phases[i] = 2.0 * kPi * (rem % grid) / grid;
        rem /= grid;
      }
    } else {
      std::uint64_t h = splitmix64(static_cast<std::uint64_t>(s));
      for (int i = 0; i < nf; ++i) {
        phases[i] = 2.0 * kPi * ((h >> 11) * 0x1.0p-53);
        h = splitmix64(h);
      }
    }
    ranked.emplace_back(misfit(prob, phases), phases);
  }
  std::sort(ranked.begin(), ranked.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  // Refining many starts serves two purposes: robustness of the global
  // minimum and discovery of every distinct exact solution the data admits.
  // The refined set is the best-ranked block plus a stride through the rest
  // of the grid so that shallow basins of further solutions are still hit.
  std::vector<std::size_t> refine_indices;
  const std::size_t head = std::min<std::size_t>(ranked.size(), 16);
  for (std::size_t i = 0; i < head; ++i) refine_indices.push_back(i);
  if (ranked.size() > head) {
    const std::size_t stride = std::max<std::size_t>((ranked.size() - head) / 16, 1);
    for (std::size_t i = head; i < ranked.size(); i += stride) refine_indices.push_back(i);
  }

  std::vector<PureState> solutions;
  for (std::size_t i : refine_indices) {
    const RealVec refined = refine_phases(prob, ranked[i].second);
    const double value = misfit(prob, refined);
    if (value < best) {
      best = value;
      best_phases = refined;
    }
    if (std::sqrt(value) < kReconTol) {
      const PureState candidate = PureState::from_coefficients(assemble(prob, refined));
      bool fresh = true;
      for (const PureState& seen : solutions)
        if (kernel(seen, candidate) < kSolutionDistinctTol) {
          fresh = false;
          break;
        }
      if (fresh) solutions.push_back(candidate);
    }
  }

  Reconstruction out{PureState::from_coefficients(assemble(prob, best_phases)), std::sqrt(best),
                     false,
                     {}};
  out.feasible = out.residual < kReconTol;
  for (std::size_t i = 0; i < solutions.size(); ++i)
    if (kernel(solutions[i], out.estimate) >= kSolutionDistinctTol)
      out.alternates.push_back(solutions[i]);
  return out;
}

Reconstruction reconstruct_from_two_bases(const RealVec& p1, const RealVec& p2, const Basis& b1,
                                          const Basis& b2) {
  Reconstruction r = try_reconstruct_from_two_bases(p1, p2, b1, b2);
  if (!r.feasible)
    raise(Errc::InfeasibleData, "no phase assignment reaches the misfit tolerance (residual " +
                                    std::to_string(r.residual) + ")");
  return r;
}

EntropyFloor entropy_floor_check(int n) {
  if (n < 2) raise(Errc::InvalidArgument, "entropy floor needs N >= 2");
  EntropyFloor floor;
  floor.floor_bits = std::log2(static_cast<double>(n)) / n;
  RealVec p(2);
  p << 1.0 - 1.0 / n, 1.0 / n;
  floor.operational_min_bits = entropy_bits(p);
  return floor;
}

double zeno_step_flip_probability(int n, double energy_spread, double period) {
  if (n < 3) raise(Errc::InvalidArgument, "zeno floor needs N >= 3");
  if (period <= 0.0) raise(Errc::InvalidArgument, "period must be positive");
  Mat h = Mat::Zero(n, n);
  h(0, 1) = energy_spread / 2.0;
  h(1, 0) = energy_spread / 2.0;
  const Hamiltonian ham{h};
  const double dt = period / n;
  const Unitary u = evolve(ham, dt);
  const PureState start = PureState::basis_vector(n, 0);
  const double survival = std::norm(inner(start, u.apply(start)));
  return clamp01(1.0 - survival);
}

ZenoScaling zeno_scaling_exponent(double energy_spread, double period) {
  ZenoScaling scaling;
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  const int ns[] = {8, 16, 32, 64};
  for (int n : ns) {
    const double p = zeno_step_flip_probability(n, energy_spread, period);
    scaling.points.emplace_back(n, p);
    const double x = std::log(static_cast<double>(n));
    const double y = std::log(p);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double count = 4.0;
  scaling.exponent = (count * sxy - sx * sy) / (count * sxx - sx * sx);
  return scaling;
}

bool audit_pair(const PureState& x, const PureState& y, const Basis& b1, const Basis& b2) {
  const double agree1 = (affinities(x, b1) - affinities(y, b1)).cwiseAbs().maxCoeff();
  const double agree2 = (affinities(x, b2) - affinities(y, b2)).cwiseAbs().maxCoeff();
  if (agree1 >= 1e-10 || agree2 >= 1e-10) return false;
  return kernel(x, y) >= kAuditTol;
}

AuditSummary two_basis_sufficiency_audit(int n, int trials, RandomSource& rng) {
  if (n != 2 && n != 3 && n != 5)
    raise(Errc::InvalidArgument, "audit runs at N in {2, 3, 5}");
  if (trials < 1) raise(Errc::InvalidArgument, "need at least one trial");
  const MubFamily family = mub_family(n);
  const Basis& b1 = family.bases[0];
  const Basis& b2 = family.bases[1];

  AuditSummary summary;
  summary.trials = trials;
  for (int t = 0; t < trials; ++t) {
    const PureState x = haar_random_state(n, rng);
    const PureState y = haar_random_state(n, rng);
    const double agree1 = (affinities(x, b1) - affinities(y, b1)).cwiseAbs().maxCoeff();
    const double agree2 = (affinities(x, b2) - affinities(y, b2)).cwiseAbs().maxCoeff();
    if (agree1 < 1e-10 && agree2 < 1e-10) {
      ++summary.stat_agreements;
      const double k = kernel(x, y);
      if (k >= kAuditTol) summary.counterexamples.push_back(AuditHit{x, y, k, t});
    }
  }
  return summary;
}

AmbiguityScan two_basis_ambiguity_scan_n2(int p_steps, int phase_steps) {
  if (p_steps < 2 || phase_steps < 2) raise(Errc::InvalidArgument, "scan grid too small");
  AmbiguityScan scan;
  const double s = 1.0 / std::sqrt(2.0);

  // States (sqrt(p), sqrt(1-p) e^{i phi}); within a fixed p the statistics in
  // both bases depend only on cos(phi), so collisions are searched per row.
  for (int ip = 1; ip < p_steps; ++ip) {
    const double p = static_cast<double>(ip) / p_steps;
    const double amp0 = std::sqrt(p);
    const double amp1 = std::sqrt(1.0 - p);

    std::map<long long, std::vector<std::pair<double, Complex>>> bins;
    for (int j = 0; j < phase_steps; ++j) {
      const double phi = -kPi + (j + 0.5) * 2.0 * kPi / phase_steps;
      const Complex c1 = amp1 * Complex(std::cos(phi), std::sin(phi));
      // X-basis statistic |<+|psi>|^2 computed from the actual amplitudes.
      const double q = std::norm(s * amp0 + s * c1);
      const long long key = std::llround(q * 1e9);
      bins[key].emplace_back(phi, c1);
      ++scan.states_scanned;
    }

    for (const auto& [key, members] : bins) {
      for (std::size_t a = 0; a < members.size(); ++a)
        for (std::size_t b = a + 1; b < members.size(); ++b) {
          const Complex overlap = amp0 * amp0 + std::conj(members[a].second) * members[b].second;
          const double k = clamp01(1.0 - std::norm(overlap));
          if (k < kAuditTol) continue;
          ++scan.pairs_found;
          if (k > scan.max_kernel) scan.max_kernel = k;
          if (scan.exemplars.size() < 8)
            scan.exemplars.push_back(AmbiguityExemplar{p, members[a].first, members[b].first, k});
        }
    }
  }
  return scan;
}

}  // namespace qklab
