#pragma once

#include "state.hpp"

namespace qklab {

// Tangent vector at a pure state; construction projects out the norm-changing
// component so that Re<psi|dpsi> = 0.
class TangentVector {
 public:
  static TangentVector at(const PureState& base, const Vec& direction);

  int dim() const { return base_.dim(); }
  const PureState& base() const { return base_; }
  const Vec& components() const { return components_; }

 private:
  TangentVector(PureState base, Vec components)
      : base_(std::move(base)), components_(std::move(components)) {}
  PureState base_;
  Vec components_;
};

// Fubini-Study quadratic form <dpsi|dpsi> - |<psi|dpsi>|^2.
double fs_metric(const TangentVector& v);

// Fisher-Rao form sum_k dp_k^2 / p_k on the open simplex.
double fr_metric(const RealVec& p, const RealVec& dp);

// Probabilities induced by exponent alpha: p_k = x_k^{alpha/2} renormalized,
// and the differential of that map along dx.
RealVec induced_probability(double alpha, const RealVec& x);
RealVec induced_probability_differential(double alpha, const RealVec& x, const RealVec& dx);

// Fubini-Study restricted to a radial (probability-changing) direction:
// sum_k dx_k^2 / (4 x_k).
double fs_metric_radial(const RealVec& x, const RealVec& dx);

// Haar state conditioned on all |c_k|^2 >= floor, keeping Fisher-Rao away
// from the simplex boundary.
PureState sample_interior_state(int dim, RandomSource& rng, double floor = 1e-4);

// Random radial direction: zero-sum perturbation of the probability vector.
RealVec sample_radial_direction(int dim, RandomSource& rng);

// Coefficient of variation of g_FR(p(alpha)) / g_FS over random interior
// states and radial directions; ~0 exactly when the ratio is
// state-independent, which singles out alpha = 2.
double born_exponent_residual(double alpha, int dim, int samples, RandomSource& rng);

// Integrates f' = sqrt(c f / x) from a regularized start f(eps) = c*eps,
// calibrates f(1) = 1, and reports max |f(x) - x| over the grid. The exact
// solution of the compatibility equation is the identity.
double ode_uniqueness_check(int grid_points);

// Residual of the power family f(x) = x^{alpha/2} inside the compatibility
// equation [f']^2/f = c/x, measured on [0.1, 1] with c calibrated at x = 1.
// Vanishes exactly at alpha = 2.
double power_family_ode_residual(double alpha, int grid_points);

// |2^{1-alpha/2} - 1|: the two-outcome normalization gap of the power family.
double n2_normalization_gap(double alpha);

// Spread (max - min) of g_FR(alpha)/g_FS|_radial along a random unitary
// orbit of a state and transported tangent. Zero for alpha = 2, strictly
// positive for generic other exponents.
double dynamics_distortion(double alpha, int dim, int steps, RandomSource& rng);

// Same sweep with an explicit starting state and tangent direction.
double dynamics_distortion_along_orbit(double alpha, const PureState& psi0, const Vec& tangent,
                                       int steps, RandomSource& rng);

// Radial data (x, dx) of a tangent vector: x_k = |c_k|^2 and
// dx_k = 2 Re(conj(c_k) dpsi_k); phase components are discarded.
void radial_data(const PureState& psi, const Vec& dpsi, RealVec& x, RealVec& dx);

}  // namespace qklab
