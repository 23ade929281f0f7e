#pragma once

#include <vector>

#include "mub.hpp"
#include "state.hpp"

namespace qklab {

inline constexpr double kReconTol = 1e-9;   // probability-misfit residual acceptance
inline constexpr double kAuditTol = 1e-6;   // kernel threshold in the two-basis audit

// Two reconstruction solutions count as distinct above this kernel; matches
// the 1 - 1e-8 fidelity gate so near-degenerate partner pairs still register.
inline constexpr double kSolutionDistinctTol = 1e-8;

struct GranularityRecord {
  int n = 0;
  double delta_theta = 0.0;    // 2 pi / N
  double min_time_step = 0.0;  // T / N
  double energy_ceiling = 0.0; // N * 2 pi / T, hbar = 1
};

GranularityRecord granularity(int n, double period);

struct IndistinguishabilityResult {
  double max_kernel = 0.0;
  double bound = 0.0;  // 2 / N
  int kernel_violations = 0;
  int overlap_bound_violations = 0;  // |<psi|psi'>| >= 1 - sum |c - c'|^2 failures
};

// Perturbs each amplitude within a disk of radius eps (< 1/N), renormalizes,
// and verifies the 2/N ceiling together with the per-trial overlap bound.
IndistinguishabilityResult indistinguishability_bound_check(const PureState& psi, double eps,
                                                            int trials, RandomSource& rng);

struct Reconstruction {
  PureState estimate;
  double residual = 0.0;  // L2 misfit between predicted and observed second-basis stats
  bool feasible = false;
  // Distinct further states that reproduce the same statistics to within
  // kReconTol. Two-basis data admits such partners for a large fraction of
  // states; they are returned as data, never suppressed.
  std::vector<PureState> alternates;
  bool ambiguous() const { return !alternates.empty(); }
};

// Two-basis state reconstruction: moduli from the first basis, relative
// phases from a multi-start grid (16 points per free phase) refined by
// Levenberg-Marquardt on the second-basis misfit.
Reconstruction try_reconstruct_from_two_bases(const RealVec& p1, const RealVec& p2,
                                              const Basis& b1, const Basis& b2);

// Same, but raises InfeasibleData when no phase assignment reaches kReconTol.
Reconstruction reconstruct_from_two_bases(const RealVec& p1, const RealVec& p2, const Basis& b1,
                                          const Basis& b2);

struct EntropyFloor {
  double floor_bits = 0.0;            // (log2 N) / N
  double operational_min_bits = 0.0;  // H(1 - 1/N, 1/N)
};

EntropyFloor entropy_floor_check(int n);

// Survival loss of e_0 under a two-level Hamiltonian of spectral spread
// energy_spread, evolved for the minimum step T/N inside dimension n.
double zeno_step_flip_probability(int n, double energy_spread, double period);

struct ZenoScaling {
  double exponent = 0.0;  // log-log slope of flip probability vs N
  std::vector<std::pair<int, double>> points;
};

// Fitted scaling exponent over N in {8, 16, 32, 64}; the floor scales as
// 1/N^2, so the slope sits at -2.
ZenoScaling zeno_scaling_exponent(double energy_spread, double period);

struct AuditHit {
  PureState x;
  PureState y;
  double kernel_value = 0.0;
  int trial = 0;
};

struct AuditSummary {
  int trials = 0;
  int stat_agreements = 0;
  std::vector<AuditHit> counterexamples;
};

// Random-pair audit of two-basis sufficiency: agreement of affinities in two
// fixed mutually unbiased bases within 1e-10 should imply a small kernel;
// hits are recorded, never suppressed.
AuditSummary two_basis_sufficiency_audit(int n, int trials, RandomSource& rng);

// Checks one explicit pair; returns true when the pair is a counterexample
// (matching statistics, kernel above kAuditTol).
bool audit_pair(const PureState& x, const PureState& y, const Basis& b1, const Basis& b2);

struct AmbiguityExemplar {
  double p = 0.0;
  double phase_a = 0.0;
  double phase_b = 0.0;
  double kernel_value = 0.0;
};

struct AmbiguityScan {
  long long states_scanned = 0;
  long long pairs_found = 0;
  double max_kernel = 0.0;
  std::vector<AmbiguityExemplar> exemplars;  // capped sample of the hits
};

// Exhaustive qubit grid search for distinct states with identical statistics
// in the computational and X bases. The conjugate-phase ambiguity shows up
// here; every hit is data.
AmbiguityScan two_basis_ambiguity_scan_n2(int p_steps, int phase_steps);

}  // namespace qklab
