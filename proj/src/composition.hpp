#pragma once

#include <vector>

#include "mub.hpp"
#include "state.hpp"

namespace qklab {

// Joint pure state of a bipartite system, index convention k = a*N_B + b.
struct CompositeState {
  int dim_a = 0;
  int dim_b = 0;
  PureState joint;
  int dim() const { return dim_a * dim_b; }
};

CompositeState tensor_state(const PureState& x, const PureState& y);

// Wraps an arbitrary joint state in the bipartite index convention.
CompositeState composite_state(int dim_a, int dim_b, const PureState& joint);

int schmidt_rank(const CompositeState& state, double tol = 1e-9);

// Unique composition law for kernels of product states:
// 1 - (1 - kA)(1 - kB).
double kernel_compose(double ka, double kb);

// Measured deviations of the composition law on random inputs, plus the
// joint-kernel-oracle violation of the deliberately wrong candidate
// f = max, which satisfies the same boundary conditions but fails
// product-state consistency.
struct CompositionLawStats {
  double symmetry_dev = 0.0;
  double associativity_dev = 0.0;
  double boundary_dev = 0.0;
  double product_consistency_dev = 0.0;   // true law vs joint-kernel oracle
  double max_candidate_violation = 0.0;   // f = max vs joint-kernel oracle
};

CompositionLawStats composition_law_tests(int samples, RandomSource& rng);

enum class OperatorField { Real, Complex };

struct TomographyRank {
  int rank = 0;
  int full_dim = 0;
};

// Numerical rank of the span of local-operator products: Hermitian products
// over C fill the joint operator space; real-symmetric products fall short.
TomographyRank local_tomography_rank(int dim_a, int dim_b, OperatorField field);

// CHSH combination E(a,b) + E(a,b') + E(a',b) - E(a',b') with correlators
// from affinities of real-plane rotated local bases.
double chsh_value(const CompositeState& state, double a, double a_prime, double b,
                  double b_prime);

CompositeState bell_state();

// Measurement as correlation formation. The interaction is a controlled
// shift on system (x) apparatus, the canonical unitary completion of the
// calibration map s_k (x) a_0 -> s_k (x) a_k.
struct MeasurementModel {
  int dim = 0;          // system and apparatus dimension
  Unitary interaction;  // acts on dim^2
};

MeasurementModel make_measurement_model(int dim);
Unitary measurement_model_unitary(int dim);

struct MeasurementOutcome {
  CompositeState joint;
  RealVec branch_affinities;
};

MeasurementOutcome measurement_interaction(const PureState& psi);

// |s - s^2|: the inner-product-preservation violation a cloning unitary
// would need; zero exactly at s = 0 and s = 1.
double no_cloning_gap(Complex overlap);

struct EntropicUncertainty {
  double entropy_sum = 0.0;  // H(B) + H(B') in bits
  double bound = 0.0;        // log2 N
};

EntropicUncertainty entropic_uncertainty_check(const PureState& psi, const Basis& b1,
                                               const Basis& b2);

struct CapacityDilution {
  long long n_eff = 0;
  double delta_phi = 0.0;  // radians
  bool nontrivial_dynamics = false;
};

CapacityDilution capacity_dilution(long long n_system, long long n_environment);

}  // namespace qklab
