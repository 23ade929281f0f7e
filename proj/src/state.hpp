#pragma once

#include <vector>

#include "common.hpp"
#include "rng.hpp"

namespace qklab {

// Unit vector in C^N with the global phase fixed so that the first amplitude
// of modulus > kTolAlg is real and non-negative. With that convention, state
// equality is plain coefficient comparison.
class PureState {
 public:
  static PureState from_coefficients(const Vec& coeffs);
  static PureState basis_vector(int dim, int k);

  int dim() const { return static_cast<int>(coeffs_.size()); }
  const Vec& coefficients() const { return coeffs_; }
  Complex amplitude(int k) const { return coeffs_[k]; }

 private:
  explicit PureState(Vec coeffs) : coeffs_(std::move(coeffs)) {}
  Vec coeffs_;
};

class Basis;

class Unitary {
 public:
  static Unitary from_matrix(Mat u);
  static Unitary identity(int dim);

  int dim() const { return static_cast<int>(matrix_.rows()); }
  const Mat& matrix() const { return matrix_; }
  PureState apply(const PureState& psi) const;

 private:
  explicit Unitary(Mat u) : matrix_(std::move(u)) {}
  Mat matrix_;
};

// Ordered set of N mutually orthonormal pure states (pairwise kernel 1).
class Basis {
 public:
  static Basis from_states(std::vector<PureState> states);
  static Basis from_unitary_columns(const Mat& u);
  static Basis computational(int dim);

  int dim() const { return static_cast<int>(states_.size()); }
  const PureState& vector(int k) const { return states_[static_cast<std::size_t>(k)]; }
  const std::vector<PureState>& vectors() const { return states_; }
  Mat matrix() const;  // columns are the basis vectors

 private:
  explicit Basis(std::vector<PureState> states) : states_(std::move(states)) {}
  std::vector<PureState> states_;
};

class DensityOperator {
 public:
  static DensityOperator from_matrix(Mat rho);
  static DensityOperator pure(const PureState& psi);
  static DensityOperator maximally_mixed(int dim);

  int dim() const { return static_cast<int>(matrix_.rows()); }
  const Mat& matrix() const { return matrix_; }

 private:
  explicit DensityOperator(Mat rho) : matrix_(std::move(rho)) {}
  Mat matrix_;
};

Complex inner(const PureState& x, const PureState& y);

// Distinguishability kernel 1 - |<x|y>|^2: 0 iff the same projective point,
// 1 iff orthogonal, symmetric, unitarily invariant.
double kernel(const PureState& x, const PureState& y);

// Mixed-state extension 1 - <z|rho|z>; reduces to kernel() on rank-1 rho.
double mixed_kernel(const DensityOperator& rho, const PureState& z);

// Outcome affinities p_k = 1 - K(psi, b_k) = |<b_k|psi>|^2.
RealVec affinities(const PureState& psi, const Basis& basis);

double fidelity(const PureState& x, const PureState& y);

PureState haar_random_state(int dim, RandomSource& rng);

// Haar unitary via QR of a complex Gaussian matrix with the diagonal of the
// triangular factor rephased to unit modulus.
Unitary haar_random_unitary(int dim, RandomSource& rng);

}  // namespace qklab
