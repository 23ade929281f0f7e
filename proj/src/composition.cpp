#include "composition.hpp"

#include <cmath>

namespace qklab {

namespace {

PureState rotated_qubit(double theta, int which) {
  Vec v(2);
  if (which == 0)
    v << std::cos(theta), std::sin(theta);
  else
    v << -std::sin(theta), std::cos(theta);
  return PureState::from_coefficients(v);
}

double correlator(const CompositeState& state, double theta_a, double theta_b) {
  double e = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const CompositeState outcome = tensor_state(rotated_qubit(theta_a, i), rotated_qubit(theta_b, j));
      const double p = std::norm(inner(outcome.joint, state.joint));
      e += ((i + j) % 2 == 0 ? 1.0 : -1.0) * p;
    }
  return e;
}

// Orthonormal Hermitian operator basis of C^{n x n} (n^2 elements) or its
// real-symmetric counterpart (n(n+1)/2 elements).
std::vector<Mat> hermitian_basis(int n, OperatorField field) {
  std::vector<Mat> ops;
  const double s = 1.0 / std::sqrt(2.0);
  for (int i = 0; i < n; ++i) {
    Mat e = Mat::Zero(n, n);
    e(i, i) = 1.0;
    ops.push_back(e);
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Mat re = Mat::Zero(n, n);
      re(i, j) = s;
      re(j, i) = s;
      ops.push_back(re);
      if (field == OperatorField::Complex) {
        Mat im = Mat::Zero(n, n);
        im(i, j) = Complex(0.0, s);
        im(j, i) = Complex(0.0, -s);
        ops.push_back(im);
      }
    }
  return ops;
}

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

// Real coordinates of a Hermitian (or real-symmetric) operator in an
// inner-product-preserving chart; rank is unchanged by the isometry.
RealVec vectorize(const Mat& h, OperatorField field) {
  const int n = static_cast<int>(h.rows());
  const int dim = (field == OperatorField::Complex) ? n * n : n * (n + 1) / 2;
  RealVec v(dim);
  int idx = 0;
  for (int i = 0; i < n; ++i) v[idx++] = h(i, i).real();
  const double s = std::sqrt(2.0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      v[idx++] = s * h(i, j).real();
      if (field == OperatorField::Complex) v[idx++] = s * h(i, j).imag();
    }
  return v;
}

}  // namespace

CompositeState tensor_state(const PureState& x, const PureState& y) {
  const int na = x.dim();
  const int nb = y.dim();
  if (na * nb > kMaxDim)
    raise(Errc::DimensionTooLarge, "joint dimension exceeds " + std::to_string(kMaxDim));
  Vec joint(na * nb);
  for (int a = 0; a < na; ++a)
    for (int b = 0; b < nb; ++b) joint[a * nb + b] = x.amplitude(a) * y.amplitude(b);
  return CompositeState{na, nb, PureState::from_coefficients(joint)};
}

CompositeState composite_state(int dim_a, int dim_b, const PureState& joint) {
  if (dim_a < 1 || dim_b < 1) raise(Errc::InvalidArgument, "factor dimensions must be positive");
  if (joint.dim() != dim_a * dim_b)
    raise(Errc::DimensionMismatch, "joint state does not match factor dimensions");
  return CompositeState{dim_a, dim_b, joint};
}

int schmidt_rank(const CompositeState& state, double tol) {
  Mat coeff(state.dim_a, state.dim_b);
  for (int a = 0; a < state.dim_a; ++a)
    for (int b = 0; b < state.dim_b; ++b) coeff(a, b) = state.joint.amplitude(a * state.dim_b + b);
  Eigen::JacobiSVD<Mat> svd(coeff);
  int rank = 0;
  for (Eigen::Index k = 0; k < svd.singularValues().size(); ++k)
    if (svd.singularValues()[k] > tol) ++rank;
  return rank;
}

double kernel_compose(double ka, double kb) {
  if (ka < -kTolAlg || ka > 1.0 + kTolAlg || kb < -kTolAlg || kb > 1.0 + kTolAlg)
    raise(Errc::OutOfRange, "kernel values must lie in [0, 1]");
  return clamp01(1.0 - (1.0 - ka) * (1.0 - kb));
}

CompositionLawStats composition_law_tests(int samples, RandomSource& rng) {
  if (samples < 100) raise(Errc::InvalidArgument, "composition law sweep needs >= 100 samples");
  CompositionLawStats stats;

  for (int s = 0; s < samples; ++s) {
    const double x = rng.uniform();
    const double y = rng.uniform();
    const double z = rng.uniform();
    stats.symmetry_dev = std::max(stats.symmetry_dev, std::abs(kernel_compose(x, y) - kernel_compose(y, x)));
    stats.associativity_dev =
        std::max(stats.associativity_dev,
                 std::abs(kernel_compose(kernel_compose(x, y), z) - kernel_compose(x, kernel_compose(y, z))));
    stats.boundary_dev = std::max({stats.boundary_dev, std::abs(kernel_compose(0.0, y) - y),
                                   std::abs(kernel_compose(x, 0.0) - x),
                                   std::abs(kernel_compose(1.0, y) - 1.0),
                                   std::abs(kernel_compose(x, 1.0) - 1.0)});
  }

  // Joint-kernel oracle on random product quadruples at 2 x 2. The true law
  // must match it; f = max must be caught by it.
  for (int s = 0; s < samples; ++s) {
    const PureState x = haar_random_state(2, rng);
    const PureState y = haar_random_state(2, rng);
    const PureState u = haar_random_state(2, rng);
    const PureState v = haar_random_state(2, rng);
    const double joint = kernel(tensor_state(x, u).joint, tensor_state(y, v).joint);
    const double ka = kernel(x, y);
    const double kb = kernel(u, v);
    stats.product_consistency_dev =
        std::max(stats.product_consistency_dev, std::abs(joint - kernel_compose(ka, kb)));
    stats.max_candidate_violation =
        std::max(stats.max_candidate_violation, std::abs(joint - std::max(ka, kb)));
  }
  return stats;
}

TomographyRank local_tomography_rank(int dim_a, int dim_b, OperatorField field) {
  if (dim_a < 2 || dim_a > 4 || dim_b < 2 || dim_b > 4)
    raise(Errc::DimensionTooLarge, "tomography rank is computed for 2 <= N <= 4");
  const auto ops_a = hermitian_basis(dim_a, field);
  const auto ops_b = hermitian_basis(dim_b, field);
  const int nab = dim_a * dim_b;
  const int full =
      (field == OperatorField::Complex) ? nab * nab : nab * (nab + 1) / 2;

  RealMat rows(static_cast<Eigen::Index>(ops_a.size() * ops_b.size()), full);
  Eigen::Index r = 0;
  for (const auto& a : ops_a)
    for (const auto& b : ops_b) rows.row(r++) = vectorize(kron(a, b), field).transpose();

  Eigen::JacobiSVD<RealMat> svd(rows);
  int rank = 0;
  for (Eigen::Index k = 0; k < svd.singularValues().size(); ++k)
    if (svd.singularValues()[k] > 1e-9) ++rank;
  return TomographyRank{rank, full};
}

double chsh_value(const CompositeState& state, double a, double a_prime, double b,
                  double b_prime) {
  if (state.dim_a != 2 || state.dim_b != 2)
    raise(Errc::DimensionMismatch, "CHSH needs a 2 x 2 composite state");
  return correlator(state, a, b) + correlator(state, a, b_prime) + correlator(state, a_prime, b) -
         correlator(state, a_prime, b_prime);
}

CompositeState bell_state() {
  Vec v(4);
  v << 1.0, 0.0, 0.0, 1.0;
  return composite_state(2, 2, PureState::from_coefficients(v));
}

Unitary measurement_model_unitary(int dim) {
  if (dim < 1) raise(Errc::DimensionZero, "apparatus dimension must be positive");
  if (dim * dim > kMaxDim)
    raise(Errc::DimensionTooLarge, "joint dimension exceeds " + std::to_string(kMaxDim));
  const int joint = dim * dim;
  Mat u = Mat::Zero(joint, joint);
  // Controlled shift: (s, m) -> (s, m + s mod N); column index s*N + m.
  for (int s = 0; s < dim; ++s)
    for (int m = 0; m < dim; ++m) u(s * dim + (m + s) % dim, s * dim + m) = 1.0;
  return Unitary::from_matrix(u);
}

MeasurementModel make_measurement_model(int dim) {
  return MeasurementModel{dim, measurement_model_unitary(dim)};
}

MeasurementOutcome measurement_interaction(const PureState& psi) {
  const int n = psi.dim();
  const MeasurementModel model = make_measurement_model(n);
  const PureState ready = PureState::basis_vector(n, 0);
  const CompositeState initial = tensor_state(psi, ready);
  const PureState joint = model.interaction.apply(initial.joint);
  const CompositeState correlated = composite_state(n, n, joint);

  RealVec branch(n);
  for (int k = 0; k < n; ++k) {
    const CompositeState target =
        tensor_state(PureState::basis_vector(n, k), PureState::basis_vector(n, k));
    branch[k] = 1.0 - kernel(correlated.joint, target.joint);
  }
  return MeasurementOutcome{correlated, branch};
}

double no_cloning_gap(Complex overlap) { return std::abs(overlap - overlap * overlap); }

EntropicUncertainty entropic_uncertainty_check(const PureState& psi, const Basis& b1,
                                               const Basis& b2) {
  if (psi.dim() != b1.dim() || psi.dim() != b2.dim())
    raise(Errc::DimensionMismatch, "state/basis dimension mismatch");
  const int n = psi.dim();
  const double target = 1.0 / n;
  const Mat overlaps = b1.matrix().adjoint() * b2.matrix();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (std::abs(std::norm(overlaps(i, j)) - target) > 1e-9)
        raise(Errc::NotUnbiased, "bases are not mutually unbiased");

  EntropicUncertainty result;
  result.entropy_sum = entropy_bits(affinities(psi, b1)) + entropy_bits(affinities(psi, b2));
  result.bound = std::log2(static_cast<double>(n));
  return result;
}

CapacityDilution capacity_dilution(long long n_system, long long n_environment) {
  if (n_system < 1 || n_environment < 1)
    raise(Errc::InvalidArgument, "capacities must be positive");
  CapacityDilution d;
  d.n_eff = n_system * n_environment;
  d.delta_phi = 2.0 * kPi / static_cast<double>(d.n_eff);
  d.nontrivial_dynamics = d.n_eff >= 3;
  return d;
}

}  // namespace qklab
