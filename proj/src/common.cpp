#include "common.hpp"

#include <cmath>

namespace qklab {

double entropy_bits(const RealVec& p) {
  double h = 0.0;
  for (Eigen::Index k = 0; k < p.size(); ++k) {
    const double pk = p[k];
    if (pk > 0.0) h -= pk * std::log2(pk);
  }
  return h;
}

double max_abs(const Mat& m) {
  double worst = 0.0;
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i) worst = std::max(worst, std::abs(m(i, j)));
  return worst;
}

std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace qklab
