#include "dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qklab {

namespace {

Mat shift_matrix(int n) {
  Mat p = Mat::Zero(n, n);
  for (int k = 0; k < n; ++k) p((k + 1) % n, k) = 1.0;
  return p;
}

std::vector<std::vector<int>> orbits_of(const std::vector<int>& sigma) {
  const int n = static_cast<int>(sigma.size());
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<std::vector<int>> orbits;
  for (int start = 0; start < n; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<int> orbit;
    int j = start;
    while (!seen[static_cast<std::size_t>(j)]) {
      seen[static_cast<std::size_t>(j)] = true;
      orbit.push_back(j);
      j = sigma[static_cast<std::size_t>(j)];
    }
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

}  // namespace

CyclicGenerator cyclic_generator(int dim) {
  if (dim < 2) raise(Errc::DimensionTooSmall, "cyclic generator needs dimension >= 2");
  if (dim > kMaxDim) raise(Errc::DimensionTooLarge, "dimension exceeds " + std::to_string(kMaxDim));
  return CyclicGenerator{Unitary::from_matrix(shift_matrix(dim))};
}

Basis fourier_eigenbasis(int dim) {
  if (dim < 2) raise(Errc::DimensionTooSmall, "fourier eigenbasis needs dimension >= 2");
  if (dim > kMaxDim) raise(Errc::DimensionTooLarge, "dimension exceeds " + std::to_string(kMaxDim));
  Mat f(dim, dim);
  const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
  for (int k = 0; k < dim; ++k)
    for (int j = 0; j < dim; ++j) {
      const double angle = -2.0 * kPi * ((static_cast<long long>(j) * k) % dim) / dim;
      f(j, k) = scale * Complex(std::cos(angle), std::sin(angle));
    }
  return Basis::from_unitary_columns(f);
}

PermutationEigenProfile permutation_eigen_analysis(const std::vector<int>& sigma) {
  const int n = static_cast<int>(sigma.size());
  if (n < 1) raise(Errc::InvalidPermutation, "empty permutation");
  if (n > kMaxDim) raise(Errc::DimensionTooLarge, "dimension exceeds " + std::to_string(kMaxDim));
  std::vector<bool> hit(static_cast<std::size_t>(n), false);
  for (int v : sigma) {
    if (v < 0 || v >= n || hit[static_cast<std::size_t>(v)])
      raise(Errc::InvalidPermutation, "not a permutation of 0..N-1");
    hit[static_cast<std::size_t>(v)] = true;
  }

  const auto orbits = orbits_of(sigma);
  PermutationEigenProfile profile;
  profile.kernel_table = RealMat(n, n);
  const Basis computational = Basis::computational(n);

  // Eigenvectors of the permutation matrix are orbit-local Fourier modes:
  // for an orbit (j_0 -> j_1 -> ... -> j_{m-1}) the mode with eigenvalue
  // w_m^r has component conj(w_m)^{sr}/sqrt(m) at position j_s.
  int col = 0;
  for (std::size_t o = 0; o < orbits.size(); ++o) {
    const auto& orbit = orbits[o];
    const int m = static_cast<int>(orbit.size());
    for (int r = 0; r < m; ++r) {
      Vec v = Vec::Zero(n);
      for (int s = 0; s < m; ++s) {
        const double angle = -2.0 * kPi * ((static_cast<long long>(s) * r) % m) / m;
        v[orbit[static_cast<std::size_t>(s)]] =
            Complex(std::cos(angle), std::sin(angle)) / std::sqrt(static_cast<double>(m));
      }
      const PureState f = PureState::from_coefficients(v);
      PermutationEigenProfile::Entry entry;
      entry.orbit_index = static_cast<int>(o);
      entry.orbit_size = m;
      entry.in_orbit_kernel = 1.0 - 1.0 / m;
      profile.eigenvectors.push_back(entry);
      for (int i = 0; i < n; ++i) profile.kernel_table(i, col) = kernel(computational.vector(i), f);
      ++col;
    }
  }

  double lo = profile.kernel_table.minCoeff();
  double hi = profile.kernel_table.maxCoeff();
  profile.uniform = (hi - lo) <= kTolAlg;
  return profile;
}

EvolutionFamily EvolutionFamily::interpolate(const CyclicGenerator& gen, double period) {
  if (period <= 0.0) raise(Errc::InvalidArgument, "period must be positive");
  const Basis f = fourier_eigenbasis(gen.dim());
  return EvolutionFamily(f.matrix(), period);
}

Unitary EvolutionFamily::evaluate(double t) const {
  const int n = dim();
  Vec phases(n);
  for (int k = 0; k < n; ++k) {
    const double angle = 2.0 * kPi * k * t / period_;
    phases[k] = Complex(std::cos(angle), std::sin(angle));
  }
  return Unitary::from_matrix(eigenvectors_ * phases.asDiagonal() * eigenvectors_.adjoint());
}

Hamiltonian hamiltonian_from_cycle(const EvolutionFamily& family) {
  const int n = family.dim();
  RealVec energies(n);
  // H = sum_k (-2 pi k / T) |f_k><f_k| is the Stone generator of the family
  // in the exp(-iHt) convention: frequency +2 pi k / T on mode k.
  for (int k = 0; k < n; ++k) energies[k] = -2.0 * kPi * k / family.period();
  const Mat& v = family.eigenvector_matrix();
  Mat h = v * energies.cast<Complex>().asDiagonal() * v.adjoint();
  h = (h + Mat(h.adjoint())) / 2.0;
  return Hamiltonian{std::move(h)};
}

Unitary evolve(const Hamiltonian& h, double t) {
  Eigen::SelfAdjointEigenSolver<Mat> es(h.entries);
  const int n = h.dim();
  Vec phases(n);
  for (int k = 0; k < n; ++k) {
    const double angle = -es.eigenvalues()[k] * t;
    phases[k] = Complex(std::cos(angle), std::sin(angle));
  }
  return Unitary::from_matrix(es.eigenvectors() * phases.asDiagonal() *
                              es.eigenvectors().adjoint());
}

ObstructionScan n2_obstruction_scan(int resolution) {
  if (resolution < 100) raise(Errc::InvalidArgument, "scan resolution must be >= 100");
  // Midpoint grid: spacing equals the 2/resolution merge radius, so the
  // points straddling an exact solution land in one cluster.
  const double step = 2.0 / resolution;
  const double accept = 2.0 / resolution;

  std::vector<std::array<double, 2>> hits;
  for (int i = 0; i < resolution; ++i) {
    const double a = -1.0 + (i + 0.5) * step;
    for (int j = 0; j < resolution; ++j) {
      const double b = -1.0 + (j + 0.5) * step;
      if (std::abs(a * a + b * b - 1.0) <= accept && std::abs(a * b) <= accept)
        hits.push_back({a, b});
    }
  }

  // Single-link clustering with merge radius 2/resolution.
  std::vector<int> label(hits.size(), -1);
  int clusters = 0;
  for (std::size_t i = 0; i < hits.size(); ++i) {
    if (label[i] >= 0) continue;
    label[i] = clusters;
    std::vector<std::size_t> frontier{i};
    while (!frontier.empty()) {
      const std::size_t cur = frontier.back();
      frontier.pop_back();
      for (std::size_t j = 0; j < hits.size(); ++j) {
        if (label[j] >= 0) continue;
        const double da = hits[cur][0] - hits[j][0];
        const double db = hits[cur][1] - hits[j][1];
        if (std::sqrt(da * da + db * db) <= accept * (1.0 + 1e-9)) {
          label[j] = clusters;
          frontier.push_back(j);
        }
      }
    }
    ++clusters;
  }

  ObstructionScan scan;
  scan.resolution = resolution;
  for (int c = 0; c < clusters; ++c) {
    double sa = 0.0, sb = 0.0;
    int count = 0;
    for (std::size_t i = 0; i < hits.size(); ++i) {
      if (label[i] != c) continue;
      sa += hits[i][0];
      sb += hits[i][1];
      ++count;
    }
    scan.cluster_centers.push_back({sa / count, sb / count});
  }

  const std::array<std::array<double, 2>, 4> exact{{{1, 0}, {-1, 0}, {0, 1}, {0, -1}}};
  for (const auto& c : scan.cluster_centers) {
    double best = 1e300;
    for (const auto& e : exact) {
      const double da = c[0] - e[0];
      const double db = c[1] - e[1];
      best = std::min(best, std::sqrt(da * da + db * db));
    }
    scan.worst_center_error = std::max(scan.worst_center_error, best);
  }
  return scan;
}

Mat n2_complex_family(double theta) {
  Mat u(2, 2);
  const Complex is(0.0, std::sin(theta));
  u << Complex(std::cos(theta), 0.0), is, is, Complex(std::cos(theta), 0.0);
  return u;
}

double bargmann_holonomy(const std::vector<PureState>& loop) {
  if (loop.size() < 2) raise(Errc::InvalidArgument, "loop needs at least two entries");
  if (kernel(loop.front(), loop.back()) > kTolAlg)
    raise(Errc::InvalidArgument, "loop is not closed");
  Complex product(1.0, 0.0);
  for (std::size_t i = 0; i + 1 < loop.size(); ++i) {
    const Complex overlap = inner(loop[i], loop[i + 1]);
    if (std::abs(overlap) <= kTolAlg)
      raise(Errc::OrthogonalLink, "consecutive loop states are orthogonal");
    product *= overlap;
  }
  return std::arg(product);
}

}  // namespace qklab
