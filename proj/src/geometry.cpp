#include "geometry.hpp"

#include <cmath>
#include <vector>

namespace qklab {

TangentVector TangentVector::at(const PureState& base, const Vec& direction) {
  if (static_cast<int>(direction.size()) != base.dim())
    raise(Errc::DimensionMismatch, "tangent/state dimension mismatch");
  const Vec& c = base.coefficients();
  Vec d = direction - c.dot(direction).real() * c;
  return TangentVector(base, std::move(d));
}

double fs_metric(const TangentVector& v) {
  const Vec& c = v.base().coefficients();
  const Vec& d = v.components();
  const double value = d.squaredNorm() - std::norm(c.dot(d));
  return value < 0.0 ? 0.0 : value;
}

double fr_metric(const RealVec& p, const RealVec& dp) {
  if (p.size() != dp.size()) raise(Errc::DimensionMismatch, "probability/direction size mismatch");
  for (Eigen::Index k = 0; k < p.size(); ++k)
    if (dp[k] != 0.0 && p[k] <= kTolAlg)
      raise(Errc::BoundarySingularity, "moving mass at a zero-probability outcome");
  if (std::abs(dp.sum()) > kTolAlg)
    raise(Errc::InvalidArgument, "direction must be tangent to the simplex (zero sum)");
  double value = 0.0;
  for (Eigen::Index k = 0; k < p.size(); ++k)
    if (dp[k] != 0.0) value += dp[k] * dp[k] / p[k];
  return value;
}

RealVec induced_probability(double alpha, const RealVec& x) {
  RealVec u(x.size());
  for (Eigen::Index k = 0; k < x.size(); ++k) u[k] = std::pow(x[k], alpha / 2.0);
  return u / u.sum();
}

RealVec induced_probability_differential(double alpha, const RealVec& x, const RealVec& dx) {
  if (x.size() != dx.size()) raise(Errc::DimensionMismatch, "x/dx size mismatch");
  const Eigen::Index n = x.size();
  RealVec u(n), du(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    u[k] = std::pow(x[k], alpha / 2.0);
    du[k] = (alpha / 2.0) * std::pow(x[k], alpha / 2.0 - 1.0) * dx[k];
  }
  const double s = u.sum();
  const double ds = du.sum();
  RealVec dp(n);
  for (Eigen::Index k = 0; k < n; ++k) dp[k] = du[k] / s - u[k] * ds / (s * s);
  return dp;
}

double fs_metric_radial(const RealVec& x, const RealVec& dx) {
  double value = 0.0;
  for (Eigen::Index k = 0; k < x.size(); ++k)
    if (dx[k] != 0.0) value += dx[k] * dx[k] / (4.0 * x[k]);
  return value;
}

PureState sample_interior_state(int dim, RandomSource& rng, double floor) {
  for (int attempt = 0; attempt < 100000; ++attempt) {
    PureState psi = haar_random_state(dim, rng);
    bool interior = true;
    for (int k = 0; k < dim; ++k)
      if (std::norm(psi.amplitude(k)) < floor) {
        interior = false;
        break;
      }
    if (interior) return psi;
  }
  raise(Errc::InvalidArgument, "interior-state rejection sampling failed");
}

RealVec sample_radial_direction(int dim, RandomSource& rng) {
  RealVec dx(dim);
  for (int k = 0; k < dim; ++k) dx[k] = rng.normal();
  dx.array() -= dx.mean();
  return dx;
}

double born_exponent_residual(double alpha, int dim, int samples, RandomSource& rng) {
  if (dim < 3) raise(Errc::InvalidArgument, "residual sweep needs dimension >= 3");
  if (samples < 10) raise(Errc::InvalidArgument, "residual sweep needs at least 10 samples");

  std::vector<double> ratios;
  ratios.reserve(static_cast<std::size_t>(samples));
  for (int s = 0; s < samples; ++s) {
    const PureState psi = sample_interior_state(dim, rng);
    RealVec x(dim);
    for (int k = 0; k < dim; ++k) x[k] = std::norm(psi.amplitude(k));
    const RealVec dx = sample_radial_direction(dim, rng);

    const double gfs = fs_metric_radial(x, dx);
    const RealVec p = induced_probability(alpha, x);
    const RealVec dp = induced_probability_differential(alpha, x, dx);
    double gfr = 0.0;
    for (int k = 0; k < dim; ++k) gfr += dp[k] * dp[k] / p[k];
    ratios.push_back(gfr / gfs);
  }

  double mean = 0.0;
  for (double r : ratios) mean += r;
  mean /= ratios.size();
  double var = 0.0;
  for (double r : ratios) var += (r - mean) * (r - mean);
  var /= ratios.size();
  return std::sqrt(var) / mean;
}

double ode_uniqueness_check(int grid_points) {
  if (grid_points < 1000) raise(Errc::InvalidArgument, "grid must have at least 1000 points");
  const double eps = 1e-6;
  const double c = 1.0;
  const double h = (1.0 - eps) / (grid_points - 1);
  const auto rhs = [c](double x, double f) { return std::sqrt(c * std::max(f, 0.0) / x); };

  std::vector<double> f(static_cast<std::size_t>(grid_points));
  f[0] = c * eps;
  for (int i = 0; i + 1 < grid_points; ++i) {
    const double x = eps + i * h;
    const double y = f[static_cast<std::size_t>(i)];
    const double k1 = rhs(x, y);
    const double k2 = rhs(x + h / 2.0, y + h / 2.0 * k1);
    const double k3 = rhs(x + h / 2.0, y + h / 2.0 * k2);
    const double k4 = rhs(x + h, y + h * k3);
    f[static_cast<std::size_t>(i + 1)] = y + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }

  const double scale = 1.0 / f.back();
  double worst = 0.0;
  for (int i = 0; i < grid_points; ++i) {
    const double x = eps + i * h;
    worst = std::max(worst, std::abs(f[static_cast<std::size_t>(i)] * scale - x));
  }
  return worst;
}

double power_family_ode_residual(double alpha, int grid_points) {
  if (grid_points < 10) raise(Errc::InvalidArgument, "grid must have at least 10 points");
  // [f']^2/f - c/x with f = x^{alpha/2} and c matched at x = 1 reduces to
  // c (x^{alpha/2 - 1} - 1) / x, so the alpha = 2 case is exactly zero.
  const double c = (alpha / 2.0) * (alpha / 2.0);
  const double lo = 0.1;
  const double h = (1.0 - lo) / (grid_points - 1);
  double worst = 0.0;
  for (int i = 0; i < grid_points; ++i) {
    const double x = lo + i * h;
    worst = std::max(worst, c * std::abs(std::pow(x, alpha / 2.0 - 1.0) - 1.0) / x);
  }
  return worst;
}

double n2_normalization_gap(double alpha) {
  if (alpha <= 0.0) raise(Errc::InvalidArgument, "exponent must be positive");
  return std::abs(std::pow(2.0, 1.0 - alpha / 2.0) - 1.0);
}

void radial_data(const PureState& psi, const Vec& dpsi, RealVec& x, RealVec& dx) {
  const int n = psi.dim();
  x.resize(n);
  dx.resize(n);
  for (int k = 0; k < n; ++k) {
    x[k] = std::norm(psi.amplitude(k));
    dx[k] = 2.0 * (std::conj(psi.amplitude(k)) * dpsi[k]).real();
  }
}

double dynamics_distortion(double alpha, int dim, int steps, RandomSource& rng) {
  if (dim < 3) raise(Errc::InvalidArgument, "distortion sweep needs dimension >= 3");
  const PureState psi0 = sample_interior_state(dim, rng);
  Vec d0(dim);
  for (int k = 0; k < dim; ++k) d0[k] = rng.complex_normal();
  return dynamics_distortion_along_orbit(alpha, psi0, d0, steps, rng);
}

double dynamics_distortion_along_orbit(double alpha, const PureState& psi0, const Vec& tangent,
                                       int steps, RandomSource& rng) {
  const int dim = psi0.dim();
  if (dim < 3) raise(Errc::InvalidArgument, "distortion sweep needs dimension >= 3");
  if (steps < 10) raise(Errc::InvalidArgument, "distortion sweep needs at least 10 steps");
  const TangentVector t0 = TangentVector::at(psi0, tangent);

  // Random one-parameter family exp(-iGt) from a GUE generator.
  Mat a(dim, dim);
  for (int j = 0; j < dim; ++j)
    for (int i = 0; i < dim; ++i) a(i, j) = rng.complex_normal();
  const Mat g = (a + Mat(a.adjoint())) / 2.0;
  Eigen::SelfAdjointEigenSolver<Mat> es(g);

  double lo = 0.0, hi = 0.0;
  bool seen = false;
  for (int s = 0; s < steps; ++s) {
    const double t = rng.uniform(0.0, 2.0 * kPi);
    Vec phases(dim);
    for (int k = 0; k < dim; ++k) {
      const double angle = -es.eigenvalues()[k] * t;
      phases[k] = Complex(std::cos(angle), std::sin(angle));
    }
    const Mat u = es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
    const Vec c = u * psi0.coefficients();
    const Vec d = u * t0.components();

    RealVec x(dim), dx(dim);
    for (int k = 0; k < dim; ++k) {
      x[k] = std::max(std::norm(c[k]), 1e-300);
      dx[k] = 2.0 * (std::conj(c[k]) * d[k]).real();
    }
    const double gfs = fs_metric_radial(x, dx);
    if (gfs < 1e-18) continue;  // no radial content at this point
    const RealVec p = induced_probability(alpha, x);
    const RealVec dp = induced_probability_differential(alpha, x, dx);
    double gfr = 0.0;
    for (int k = 0; k < dim; ++k) gfr += dp[k] * dp[k] / p[k];
    const double r = gfr / gfs;
    if (!seen) {
      lo = hi = r;
      seen = true;
    } else {
      lo = std::min(lo, r);
      hi = std::max(hi, r);
    }
  }
  return seen ? hi - lo : 0.0;
}

}  // namespace qklab
