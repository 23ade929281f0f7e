#include "rng.hpp"

namespace qklab {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

RandomSource::RandomSource(std::uint64_t seed) : seed_(seed), engine_(splitmix64(seed)) {}

RandomSource RandomSource::split(std::uint64_t stream) const {
  return RandomSource(splitmix64(seed_ ^ (stream + 1) * 0x9E3779B97F4A7C15ull));
}

double RandomSource::uniform() {
  return std::uniform_real_distribution<double>(0.0, 1.0)(engine_);
}

double RandomSource::uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(engine_);
}

double RandomSource::normal() { return normal_(engine_); }

Complex RandomSource::complex_normal() {
  const double re = normal();
  const double im = normal();
  return {re, im};
}

std::uint64_t RandomSource::next_u64() { return engine_(); }

}  // namespace qklab
