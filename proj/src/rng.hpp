#pragma once

#include <cstdint>
#include <random>

#include "common.hpp"

namespace qklab {

std::uint64_t splitmix64(std::uint64_t x);

// Deterministic random source: identical seeds yield identical draw
// sequences. Independent sub-streams come from split(): child k of a source
// with seed s is seeded splitmix64(s ^ (k + 1) * 0x9E3779B97F4A7C15), so a
// sweep can hand every task its own source and stay reproducible regardless
// of scheduling.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed);

  std::uint64_t seed() const { return seed_; }
  RandomSource split(std::uint64_t stream) const;

  double uniform();  // [0, 1)
  double uniform(double lo, double hi);
  double normal();
  Complex complex_normal();  // independent N(0,1) real and imaginary parts
  std::uint64_t next_u64();

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace qklab
