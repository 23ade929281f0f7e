#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace qklab {

using Complex = std::complex<double>;
using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;
using RealVec = Eigen::VectorXd;
using RealMat = Eigen::MatrixXd;

// Closed-form algebraic identities are held to kTolAlg; anything that went
// through an iterative or optimized path is held to kTolIter.
inline constexpr double kTolAlg = 1e-12;
inline constexpr double kTolIter = 1e-8;

// Every state-like object lives in dimension 1..kMaxDim.
inline constexpr int kMaxDim = 64;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

enum class Errc {
  DimensionZero,
  DimensionTooSmall,
  DimensionTooLarge,
  DimensionMismatch,
  ZeroVector,
  NotDensityOperator,
  InvalidPermutation,
  OrthogonalLink,
  UnsupportedDimension,
  BoundarySingularity,
  OutOfRange,
  Overflow,
  NotUnbiased,
  InfeasibleData,
  UnknownSuite,
  IoError,
  InvalidArgument,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) { throw Error(code, what); }

inline double clamp01(double x) { return x < 0.0 ? 0.0 : (x > 1.0 ? 1.0 : x); }

// Shannon entropy in bits; zero-probability outcomes contribute nothing.
double entropy_bits(const RealVec& p);

// Entrywise max modulus.
double max_abs(const Mat& m);

// FNV-1a, used to derive stable per-check RNG stream ids from check names.
std::uint64_t fnv1a64(const std::string& s);

}  // namespace qklab
