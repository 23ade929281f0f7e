#pragma once

#include <vector>

#include "state.hpp"

namespace qklab {

// Family of pairwise mutually unbiased bases sharing one dimension:
// |<b_i|b'_j>|^2 = 1/N for every pair of distinct bases.
struct MubFamily {
  int dim = 0;
  std::vector<Basis> bases;
  int size() const { return static_cast<int>(bases.size()); }
};

// Full family of N+1 mutually unbiased bases for N = 2 or odd prime N <= 61.
// For odd primes the non-computational bases have components
// w^(a j^2 + m j)/sqrt(N) (quadratic Gauss-sum construction); for N = 2 the
// two conjugate equatorial bases complete the family. Composite and even
// dimensions above 2 are rejected.
MubFamily mub_family(int dim);

// Worst-case deviation of |<b_i|b'_j>|^2 from 1/N over all cross-basis pairs.
double verify_unbiased(const MubFamily& family);

bool is_supported_mub_dimension(int dim);

}  // namespace qklab
