#include <doctest.h>

#include <cmath>

#include "mub.hpp"
#include "rng.hpp"
#include "sampling.hpp"

using namespace qklab;

TEST_CASE("granularity record formulas") {
  const GranularityRecord g3 = granularity(3, 1.0);
  CHECK(std::abs(g3.delta_theta - 2.0 * kPi / 3.0) < 1e-15);
  CHECK(std::abs(granularity(10, 1.0).delta_theta * 180.0 / kPi - 36.0) < 1e-12);
  for (int n = 1; n <= 32; ++n)
    CHECK(std::abs(granularity(2 * n, 1.0).delta_theta - granularity(n, 1.0).delta_theta / 2.0) <
          1e-15);
  const GranularityRecord g = granularity(4, 8.0);
  CHECK(g.min_time_step == doctest::Approx(2.0));
  CHECK(g.energy_ceiling == doctest::Approx(4.0 * 2.0 * kPi / 8.0));
  CHECK_THROWS_AS(granularity(0, 1.0), Error);
  CHECK_THROWS_AS(granularity(3, 0.0), Error);
}

TEST_CASE("indistinguishability bound 2/N holds under small perturbations") {
  RandomSource rng(18);
  for (int n : {3, 4, 8}) {
    const PureState psi = haar_random_state(n, rng);
    const IndistinguishabilityResult r =
        indistinguishability_bound_check(psi, 0.5 / n, 1000, rng);
    CHECK(r.bound == doctest::Approx(2.0 / n));
    CHECK(r.max_kernel <= r.bound);
    CHECK(r.kernel_violations == 0);
    CHECK(r.overlap_bound_violations == 0);
  }

  const PureState psi = haar_random_state(4, rng);
  CHECK(indistinguishability_bound_check(psi, 0.0, 10, rng).max_kernel < 1e-12);
  CHECK_THROWS_AS(indistinguishability_bound_check(psi, 0.3, 10, rng), Error);  // eps >= 1/N
}

TEST_CASE("reconstruction of a basis state is exact") {
  const MubFamily family = mub_family(3);
  RealVec p1 = RealVec::Zero(3);
  p1[0] = 1.0;
  const RealVec p2 = RealVec::Constant(3, 1.0 / 3.0);
  const Reconstruction r =
      try_reconstruct_from_two_bases(p1, p2, family.bases[0], family.bases[1]);
  CHECK(r.feasible);
  CHECK(r.residual < 1e-12);
  CHECK(fidelity(r.estimate, family.bases[0].vector(0)) > 1.0 - 1e-12);
}

TEST_CASE("reconstruction reproduces data; misses always come with a partner") {
  RandomSource rng(51);
  const MubFamily family = mub_family(3);
  const Basis& b1 = family.bases[0];
  const Basis& b2 = family.bases[1];
  int ambiguous = 0;
  for (int i = 0; i < 100; ++i) {
    const PureState truth = haar_random_state(3, rng);
    const RealVec p1 = affinities(truth, b1);
    const RealVec p2 = affinities(truth, b2);
    const Reconstruction r = try_reconstruct_from_two_bases(p1, p2, b1, b2);
    REQUIRE(r.feasible);
    // estimate reproduces the observed statistics
    CHECK((affinities(r.estimate, b1) - p1).cwiseAbs().maxCoeff() < 1e-9);
    CHECK((affinities(r.estimate, b2) - p2).cwiseAbs().maxCoeff() < 1e-9);
    const double fid = fidelity(r.estimate, truth);
    if (r.ambiguous()) {
      ++ambiguous;
      // alternates are genuinely different states with the same statistics
      for (const PureState& alt : r.alternates) {
        CHECK(kernel(alt, r.estimate) > kSolutionDistinctTol);
        CHECK((affinities(alt, b1) - p1).cwiseAbs().maxCoeff() < 1e-8);
        CHECK((affinities(alt, b2) - p2).cwiseAbs().maxCoeff() < 1e-8);
      }
    } else {
      // unique data -> exact recovery
      CHECK(fid > 1.0 - 1e-8);
    }
    if (fid <= 1.0 - 1e-8) CHECK(r.ambiguous());
  }
  // two-basis data is ambiguous for most qutrits (discrete partner states)
  CHECK(ambiguous > 50);
}

TEST_CASE("reconstruction raises InfeasibleData on inconsistent statistics") {
  const MubFamily family = mub_family(3);
  RealVec p1 = RealVec::Zero(3);
  p1[0] = 1.0;
  RealVec p2 = RealVec::Zero(3);
  p2[0] = 1.0;  // a basis state cannot be sharp in the unbiased partner basis
  try {
    reconstruct_from_two_bases(p1, p2, family.bases[0], family.bases[1]);
    FAIL("expected InfeasibleData");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::InfeasibleData);
  }
}

TEST_CASE("reconstruction requires a mutually unbiased pair") {
  const Basis comp = Basis::computational(3);
  const RealVec uniform = RealVec::Constant(3, 1.0 / 3.0);
  try {
    try_reconstruct_from_two_bases(uniform, uniform, comp, comp);
    FAIL("expected NotUnbiased");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotUnbiased);
  }
}

TEST_CASE("entropy floor: reference values and factor-of-4 window") {
  const EntropyFloor f4 = entropy_floor_check(4);
  CHECK(f4.floor_bits == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(f4.operational_min_bits == doctest::Approx(0.8112781244591328).epsilon(1e-12));

  for (int n = 2; n <= 64; ++n) {
    const EntropyFloor f = entropy_floor_check(n);
    CHECK(f.operational_min_bits >= f.floor_bits);
    CHECK(f.operational_min_bits <= 4.0 * f.floor_bits);
  }
  for (int n = 3; n < 64; ++n)
    CHECK(entropy_floor_check(n + 1).floor_bits < entropy_floor_check(n).floor_bits * 1.0001);

  RealVec delta = RealVec::Zero(5);
  delta[2] = 1.0;
  CHECK(entropy_bits(delta) == 0.0);  // the floor is operational, not mathematical
}

TEST_CASE("zeno floor: scaling exponent -2 and stationary limit") {
  // log-log regression oracle over the four dimensions
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (int n : {8, 16, 32, 64}) {
    const double p = zeno_step_flip_probability(n, 1.0, 1.0);
    CHECK(p > 0.0);
    sx += std::log(n);
    sy += std::log(p);
    sxx += std::log(n) * std::log(n);
    sxy += std::log(n) * std::log(p);
  }
  const double slope = (4 * sxy - sx * sy) / (4 * sxx - sx * sx);
  CHECK(std::abs(slope + 2.0) < 0.1);

  const ZenoScaling scaling = zeno_scaling_exponent(1.0, 1.0);
  CHECK(scaling.exponent == doctest::Approx(slope).epsilon(1e-12));
  CHECK(scaling.points.size() == 4);

  CHECK(zeno_step_flip_probability(16, 0.0, 1.0) < 1e-12);
  CHECK_THROWS_AS(zeno_step_flip_probability(2, 1.0, 1.0), Error);
}

TEST_CASE("two-basis sufficiency audit: identical states agree, random pairs never collide") {
  RandomSource rng(70);
  const AuditSummary summary = two_basis_sufficiency_audit(3, 2000, rng);
  CHECK(summary.trials == 2000);
  CHECK(summary.counterexamples.empty());

  const MubFamily family = mub_family(3);
  const PureState x = haar_random_state(3, rng);
  CHECK_FALSE(audit_pair(x, x, family.bases[0], family.bases[1]));
  CHECK_THROWS_AS(two_basis_sufficiency_audit(4, 100, rng), Error);
}

TEST_CASE("audit flags the conjugate qubit pair with identical two-basis statistics") {
  const MubFamily family = mub_family(2);
  Vec up(2), down(2);
  up << 1.0, Complex(0.0, 1.0);
  down << 1.0, Complex(0.0, -1.0);
  const PureState plus_i = PureState::from_coefficients(up);
  const PureState minus_i = PureState::from_coefficients(down);
  CHECK(kernel(plus_i, minus_i) > 0.99);  // maximally distinguishable
  CHECK(audit_pair(plus_i, minus_i, family.bases[0], family.bases[1]));
}

TEST_CASE("qubit ambiguity grid scan records conjugate-phase pairs as data") {
  const AmbiguityScan scan = two_basis_ambiguity_scan_n2(200, 720);
  CHECK(scan.pairs_found > 0);
  CHECK(scan.max_kernel > 0.9);
  REQUIRE(!scan.exemplars.empty());
  for (const auto& ex : scan.exemplars) {
    CHECK(std::abs(ex.phase_a + ex.phase_b) < 1e-9);  // partners are phase conjugates
    CHECK(ex.kernel_value >= kAuditTol);
  }
}
