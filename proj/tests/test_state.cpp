#include <doctest.h>

#include <cmath>

#include "rng.hpp"
#include "state.hpp"

using namespace qklab;

namespace {

Vec vec3(Complex a, Complex b, Complex c) {
  Vec v(3);
  v << a, b, c;
  return v;
}

}  // namespace

TEST_CASE("make_state identity case") {
  const PureState s = PureState::from_coefficients(vec3(1.0, 0.0, 0.0));
  CHECK(s.dim() == 3);
  CHECK(std::abs(s.amplitude(0) - Complex(1.0, 0.0)) < 1e-15);
  CHECK(std::abs(s.amplitude(1)) < 1e-15);
}

TEST_CASE("make_state rejects the zero vector") {
  CHECK_THROWS_AS(PureState::from_coefficients(vec3(0.0, 0.0, 0.0)), Error);
  try {
    PureState::from_coefficients(vec3(1e-13, 0.0, 0.0));
    FAIL("expected ZeroVector");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ZeroVector);
  }
}

TEST_CASE("make_state rejects dimension zero and oversized vectors") {
  try {
    PureState::from_coefficients(Vec(0));
    FAIL("expected DimensionZero");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DimensionZero);
  }
  Vec big = Vec::Ones(65);
  try {
    PureState::from_coefficients(big);
    FAIL("expected DimensionTooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DimensionTooLarge);
  }
}

TEST_CASE("make_state normalizes (1,1,1) to 1/sqrt(3) components") {
  const PureState s = PureState::from_coefficients(vec3(1.0, 1.0, 1.0));
  const double expected = 1.0 / std::sqrt(3.0);
  for (int k = 0; k < 3; ++k) CHECK(std::abs(s.amplitude(k) - Complex(expected, 0)) < 1e-12);
  CHECK(std::abs(s.coefficients().norm() - 1.0) < 1e-12);
}

TEST_CASE("canonical phase: first significant amplitude real and non-negative") {
  const Complex phase(std::cos(2.1), std::sin(2.1));
  const PureState a = PureState::from_coefficients(vec3(0.0, phase * 0.6, phase * 0.8));
  CHECK(std::abs(a.amplitude(1).imag()) < 1e-12);
  CHECK(a.amplitude(1).real() > 0.0);
  // rephasing the input must not change the stored coefficients
  const PureState b = PureState::from_coefficients(vec3(0.0, 0.6, 0.8));
  CHECK((a.coefficients() - b.coefficients()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("kernel values: orthogonal, self, superposition") {
  const Basis e = Basis::computational(3);
  CHECK(kernel(e.vector(0), e.vector(1)) == doctest::Approx(1.0).epsilon(1e-12));
  const PureState psi = PureState::from_coefficients(vec3(1.0, 1.0, 1.0));
  CHECK(kernel(psi, psi) == doctest::Approx(0.0).epsilon(1e-12));
  // |<psi|e0>|^2 = 1/3 by direct computation, so K = 2/3
  CHECK(std::abs(kernel(psi, e.vector(0)) - 2.0 / 3.0) < 1e-12);
}

TEST_CASE("kernel rejects dimension mismatch") {
  const PureState two = PureState::from_coefficients((Vec(2) << 1.0, 0.0).finished());
  const PureState three = PureState::from_coefficients(vec3(1.0, 0.0, 0.0));
  try {
    kernel(two, three);
    FAIL("expected DimensionMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DimensionMismatch);
  }
}

TEST_CASE("kernel axioms on random samples") {
  RandomSource rng(31);
  for (int n : {2, 3, 5}) {
    for (int i = 0; i < 100; ++i) {
      const PureState x = haar_random_state(n, rng);
      const PureState y = haar_random_state(n, rng);
      CHECK(kernel(x, x) <= 1e-12);
      CHECK(std::abs(kernel(x, y) - kernel(y, x)) <= 1e-12);
      CHECK(kernel(x, y) >= 0.0);
      CHECK(kernel(x, y) <= 1.0);
    }
  }
}

TEST_CASE("kernel is unitarily invariant") {
  RandomSource rng(77);
  for (int n : {2, 3, 5}) {
    for (int i = 0; i < 100; ++i) {
      const PureState x = haar_random_state(n, rng);
      const PureState y = haar_random_state(n, rng);
      const Unitary u = haar_random_unitary(n, rng);
      CHECK(std::abs(kernel(u.apply(x), u.apply(y)) - kernel(x, y)) < 1e-12);
    }
  }
}

TEST_CASE("mixed kernel: pure reduction and maximally mixed state") {
  const PureState e0 = PureState::basis_vector(3, 0);
  CHECK(mixed_kernel(DensityOperator::pure(e0), e0) == doctest::Approx(0.0).epsilon(1e-12));

  RandomSource rng(5);
  const DensityOperator mixed = DensityOperator::maximally_mixed(4);
  for (int i = 0; i < 10; ++i)
    CHECK(std::abs(mixed_kernel(mixed, haar_random_state(4, rng)) - 0.75) < 1e-12);
}

TEST_CASE("mixed kernel matches pure kernel on 100 random rank-1 pairs") {
  RandomSource rng(13);
  for (int i = 0; i < 100; ++i) {
    const PureState psi = haar_random_state(4, rng);
    const PureState z = haar_random_state(4, rng);
    CHECK(std::abs(mixed_kernel(DensityOperator::pure(psi), z) - kernel(psi, z)) < 1e-12);
  }
}

TEST_CASE("density operator validation") {
  Mat bad = Mat::Identity(2, 2);
  bad(0, 1) = Complex(0.3, 0.1);  // not Hermitian
  CHECK_THROWS_AS(DensityOperator::from_matrix(bad), Error);

  Mat negative = Mat::Zero(2, 2);
  negative(0, 0) = 1.5;
  negative(1, 1) = -0.5;  // trace one, negative eigenvalue
  try {
    DensityOperator::from_matrix(negative);
    FAIL("expected NotDensityOperator");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotDensityOperator);
  }
}

TEST_CASE("affinities: delta on basis states, uniform superposition, unit sum") {
  const Basis e = Basis::computational(3);
  const RealVec delta = affinities(e.vector(1), e);
  for (int k = 0; k < 3; ++k) CHECK(std::abs(delta[k] - (k == 1 ? 1.0 : 0.0)) < 1e-12);

  const PureState psi = PureState::from_coefficients(vec3(1.0, 1.0, 1.0));
  const RealVec p = affinities(psi, e);
  for (int k = 0; k < 3; ++k) CHECK(std::abs(p[k] - 1.0 / 3.0) < 1e-12);

  RandomSource rng(17);
  for (int i = 0; i < 100; ++i) {
    const RealVec q = affinities(haar_random_state(3, rng), e);
    CHECK(std::abs(q.sum() - 1.0) < 1e-12);
    CHECK(q.minCoeff() >= 0.0);
  }
}

TEST_CASE("haar state sampling: reproducibility, N=1, first moment") {
  RandomSource a(42), b(42);
  const PureState sa = haar_random_state(3, a);
  const PureState sb = haar_random_state(3, b);
  CHECK((sa.coefficients() - sb.coefficients()).cwiseAbs().maxCoeff() == 0.0);

  RandomSource one(9);
  const PureState unique = haar_random_state(1, one);
  CHECK(std::abs(unique.amplitude(0) - Complex(1.0, 0.0)) < 1e-12);

  // E|c_0|^2 = 1/2 for the uniform measure on the Bloch sphere
  RandomSource rng(42);
  double mean = 0.0;
  const int draws = 10000;
  for (int i = 0; i < draws; ++i) mean += std::norm(haar_random_state(2, rng).amplitude(0));
  mean /= draws;
  CHECK(std::abs(mean - 0.5) < 0.02);
}

TEST_CASE("haar unitary: unitarity, reproducibility, column moment") {
  RandomSource a(7), b(7);
  const Unitary ua = haar_random_unitary(4, a);
  const Unitary ub = haar_random_unitary(4, b);
  CHECK(max_abs(ua.matrix() - ub.matrix()) == 0.0);
  CHECK(max_abs(ua.matrix().adjoint() * ua.matrix() - Mat::Identity(4, 4)) < 1e-12);

  RandomSource rng(4242);
  double mean = 0.0;
  const int draws = 10000;
  for (int i = 0; i < draws; ++i) mean += std::norm(haar_random_unitary(2, rng).matrix()(0, 0));
  mean /= draws;
  CHECK(std::abs(mean - 0.5) < 0.02);
}

TEST_CASE("rng split streams are independent of derivation order") {
  const RandomSource root(123);
  RandomSource s1 = root.split(4);
  RandomSource s2 = root.split(9);
  RandomSource s1_again = root.split(4);
  const double a = s1.uniform();
  (void)s2.uniform();
  CHECK(s1_again.uniform() == a);
}

TEST_CASE("basis construction validates orthonormality") {
  std::vector<PureState> skewed = {PureState::from_coefficients((Vec(2) << 1.0, 0.0).finished()),
                                   PureState::from_coefficients((Vec(2) << 1.0, 1.0).finished())};
  CHECK_THROWS_AS(Basis::from_states(skewed), Error);
}
