#include "mub.hpp"

#include <cmath>

namespace qklab {

namespace {

bool is_odd_prime(int n) {
  if (n < 3 || n % 2 == 0) return false;
  for (int d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

bool is_supported_mub_dimension(int dim) {
  return dim == 2 || (is_odd_prime(dim) && dim <= 61);
}

MubFamily mub_family(int dim) {
  if (dim < 2) raise(Errc::DimensionTooSmall, "mub family needs dimension >= 2");
  if (!is_supported_mub_dimension(dim))
    raise(Errc::UnsupportedDimension,
          "mub construction covers N = 2 and odd primes up to 61, got " + std::to_string(dim));

  MubFamily family;
  family.dim = dim;
  family.bases.push_back(Basis::computational(dim));

  if (dim == 2) {
    const double s = 1.0 / std::sqrt(2.0);
    Mat x(2, 2), y(2, 2);
    x << s, s, s, -s;
    y << Complex(s, 0), Complex(s, 0), Complex(0, s), Complex(0, -s);
    family.bases.push_back(Basis::from_unitary_columns(x));
    family.bases.push_back(Basis::from_unitary_columns(y));
    return family;
  }

  // Roots of unity are tabulated once so every entry is a single table
  // lookup with an exactly reduced exponent.
  std::vector<Complex> root(static_cast<std::size_t>(dim));
  for (int r = 0; r < dim; ++r) {
    const double angle = 2.0 * kPi * r / dim;
    root[static_cast<std::size_t>(r)] = Complex(std::cos(angle), std::sin(angle));
  }
  const double scale = 1.0 / std::sqrt(static_cast<double>(dim));

  for (int a = 0; a < dim; ++a) {
    Mat b(dim, dim);
    for (int m = 0; m < dim; ++m)
      for (int j = 0; j < dim; ++j) {
        const long long e = (static_cast<long long>(a) * j * j + static_cast<long long>(m) * j) %
                            dim;
        b(j, m) = scale * root[static_cast<std::size_t>(e)];
      }
    family.bases.push_back(Basis::from_unitary_columns(b));
  }
  return family;
}

double verify_unbiased(const MubFamily& family) {
  const int n = family.dim;
  if (n < 1) raise(Errc::InvalidArgument, "empty family");
  const double target = 1.0 / n;
  double worst = 0.0;
  for (std::size_t a = 0; a < family.bases.size(); ++a)
    for (std::size_t b = a + 1; b < family.bases.size(); ++b) {
      const Mat overlaps = family.bases[a].matrix().adjoint() * family.bases[b].matrix();
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          worst = std::max(worst, std::abs(std::norm(overlaps(i, j)) - target));
    }
  return worst;
}

}  // namespace qklab
