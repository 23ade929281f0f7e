#include "state.hpp"

#include <cmath>

namespace qklab {

namespace {

void check_dim(int dim) {
  if (dim == 0) raise(Errc::DimensionZero, "dimension must be positive");
  if (dim < 0) raise(Errc::InvalidArgument, "negative dimension");
  if (dim > kMaxDim) raise(Errc::DimensionTooLarge, "dimension exceeds " + std::to_string(kMaxDim));
}

Vec canonicalize(Vec c) {
  for (Eigen::Index k = 0; k < c.size(); ++k) {
    const double mag = std::abs(c[k]);
    if (mag > kTolAlg) {
      c *= std::conj(c[k]) / mag;
      break;
    }
  }
  return c;
}

}  // namespace

PureState PureState::from_coefficients(const Vec& coeffs) {
  check_dim(static_cast<int>(coeffs.size()));
  double largest = 0.0;
  for (Eigen::Index k = 0; k < coeffs.size(); ++k) largest = std::max(largest, std::abs(coeffs[k]));
  if (largest <= kTolAlg) raise(Errc::ZeroVector, "all amplitudes below tolerance");
  Vec c = coeffs / coeffs.norm();
  return PureState(canonicalize(std::move(c)));
}

PureState PureState::basis_vector(int dim, int k) {
  check_dim(dim);
  if (k < 0 || k >= dim) raise(Errc::InvalidArgument, "basis index out of range");
  Vec c = Vec::Zero(dim);
  c[k] = 1.0;
  return PureState(std::move(c));
}

Unitary Unitary::from_matrix(Mat u) {
  if (u.rows() != u.cols()) raise(Errc::InvalidArgument, "unitary must be square");
  check_dim(static_cast<int>(u.rows()));
  const Mat gram = u.adjoint() * u;
  const double dev = max_abs(gram - Mat::Identity(u.rows(), u.cols()));
  if (dev > 1e-10) raise(Errc::InvalidArgument, "matrix is not unitary within tolerance");
  return Unitary(std::move(u));
}

Unitary Unitary::identity(int dim) {
  check_dim(dim);
  return Unitary(Mat::Identity(dim, dim));
}

PureState Unitary::apply(const PureState& psi) const {
  if (psi.dim() != dim()) raise(Errc::DimensionMismatch, "unitary/state dimension mismatch");
  return PureState::from_coefficients(matrix_ * psi.coefficients());
}

Basis Basis::from_states(std::vector<PureState> states) {
  if (states.empty()) raise(Errc::DimensionZero, "basis needs at least one state");
  const int n = states.front().dim();
  if (static_cast<int>(states.size()) != n)
    raise(Errc::InvalidArgument, "basis must contain exactly dim states");
  for (const auto& s : states)
    if (s.dim() != n) raise(Errc::DimensionMismatch, "mixed dimensions in basis");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::norm(inner(states[i], states[j])) > kTolAlg)
        raise(Errc::InvalidArgument, "basis states are not mutually orthogonal");
  return Basis(std::move(states));
}

Basis Basis::from_unitary_columns(const Mat& u) {
  Unitary checked = Unitary::from_matrix(u);
  std::vector<PureState> states;
  states.reserve(static_cast<std::size_t>(u.cols()));
  for (Eigen::Index k = 0; k < u.cols(); ++k)
    states.push_back(PureState::from_coefficients(checked.matrix().col(k)));
  return Basis(std::move(states));
}

Basis Basis::computational(int dim) {
  check_dim(dim);
  std::vector<PureState> states;
  states.reserve(static_cast<std::size_t>(dim));
  for (int k = 0; k < dim; ++k) states.push_back(PureState::basis_vector(dim, k));
  return Basis(std::move(states));
}

Mat Basis::matrix() const {
  const int n = dim();
  Mat m(n, n);
  for (int k = 0; k < n; ++k) m.col(k) = states_[static_cast<std::size_t>(k)].coefficients();
  return m;
}

DensityOperator DensityOperator::from_matrix(Mat rho) {
  if (rho.rows() != rho.cols()) raise(Errc::NotDensityOperator, "density operator must be square");
  check_dim(static_cast<int>(rho.rows()));
  if (max_abs(rho - rho.adjoint()) > kTolAlg)
    raise(Errc::NotDensityOperator, "density operator is not Hermitian");
  if (std::abs(rho.trace().real() - 1.0) > kTolAlg || std::abs(rho.trace().imag()) > kTolAlg)
    raise(Errc::NotDensityOperator, "density operator trace is not 1");
  Eigen::SelfAdjointEigenSolver<Mat> es(rho, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -kTolAlg)
    raise(Errc::NotDensityOperator, "density operator has a negative eigenvalue");
  return DensityOperator(std::move(rho));
}

DensityOperator DensityOperator::pure(const PureState& psi) {
  const Vec& c = psi.coefficients();
  return DensityOperator(c * c.adjoint());
}

DensityOperator DensityOperator::maximally_mixed(int dim) {
  check_dim(dim);
  return DensityOperator(Mat::Identity(dim, dim) / static_cast<double>(dim));
}

Complex inner(const PureState& x, const PureState& y) {
  if (x.dim() != y.dim()) raise(Errc::DimensionMismatch, "state dimensions differ");
  return x.coefficients().dot(y.coefficients());
}

double kernel(const PureState& x, const PureState& y) {
  return clamp01(1.0 - std::norm(inner(x, y)));
}

double mixed_kernel(const DensityOperator& rho, const PureState& z) {
  if (rho.dim() != z.dim()) raise(Errc::DimensionMismatch, "density/state dimension mismatch");
  const Complex overlap = z.coefficients().dot(rho.matrix() * z.coefficients());
  return clamp01(1.0 - overlap.real());
}

RealVec affinities(const PureState& psi, const Basis& basis) {
  if (psi.dim() != basis.dim()) raise(Errc::DimensionMismatch, "state/basis dimension mismatch");
  RealVec p(basis.dim());
  for (int k = 0; k < basis.dim(); ++k) p[k] = std::norm(inner(basis.vector(k), psi));
  return p;
}

double fidelity(const PureState& x, const PureState& y) { return clamp01(std::norm(inner(x, y))); }

PureState haar_random_state(int dim, RandomSource& rng) {
  check_dim(dim);
  Vec c(dim);
  for (int k = 0; k < dim; ++k) c[k] = rng.complex_normal();
  return PureState::from_coefficients(c);
}

Unitary haar_random_unitary(int dim, RandomSource& rng) {
  check_dim(dim);
  Mat a(dim, dim);
  for (int j = 0; j < dim; ++j)
    for (int i = 0; i < dim; ++i) a(i, j) = rng.complex_normal();
  Eigen::HouseholderQR<Mat> qr(a);
  Mat q = qr.householderQ();
  const Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int k = 0; k < dim; ++k) {
    const Complex d = r(k, k);
    const double mag = std::abs(d);
    q.col(k) *= (mag > 0.0) ? d / mag : Complex(1.0, 0.0);
  }
  return Unitary::from_matrix(std::move(q));
}

}  // namespace qklab
