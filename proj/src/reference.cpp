#include "fpst/reference.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "fpst/quadrature.hpp"
#include "fpst/specfun.hpp"

namespace fpst::reference {

namespace {

quad::QuadOptions oracle_options(double tol) {
  quad::QuadOptions options;
  options.rel_tol = tol;
  options.max_subdivisions = 20000;
  return options;
}

/// Integrates over consecutive breakpoints; when `tail` is set the last
/// breakpoint starts a mapped semi-infinite piece.
OracleReport piecewise(const quad::Integrand& f, std::vector<double> points, bool tail, double tol,
                       const char* method) {
  const auto options = oracle_options(tol);
  OracleReport out;
  out.method = method;
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    if (!(points[i] < points[i + 1])) continue;
    const auto q = quad::integrate(f, points[i], points[i + 1], options);
    out.value += q.value;
    out.error_estimate += q.abs_error_estimate;
    out.evaluations += q.evaluations;
  }
  if (tail) {
    const auto q = quad::integrate_semi_infinite(f, points.back(), options);
    out.value += q.value;
    out.error_estimate += q.abs_error_estimate;
    out.evaluations += q.evaluations;
  }
  return out;
}

/// 0, s, 10s, 100s, ... below `stop`, then `stop`.
std::vector<double> geometric_breaks(double s, double stop) {
  std::vector<double> points{0.0};
  for (double x = s; x < stop; x *= 10.0) points.push_back(x);
  points.push_back(stop);
  return points;
}

/// Point past which f has decayed far below anything that matters.
double decay_point(const EntireFunction& f) {
  if (f.family() == Family::gauss_exp && f.params().alpha > 0.0) {
    const auto& p = f.params();
    return std::max(p.beta / (2.0 * p.alpha), 0.0) + 10.0 / std::sqrt(p.alpha);
  }
  return 1.0;
}

OracleReport kernel_quadrature(const EntireFunction& f, double omega, double a, double tol,
                               const quad::Integrand& integrand, const char* method) {
  if (!(omega > 0.0)) throw DomainError("omega must be positive");
  if (!(a > 0.0)) throw DomainError("a must be positive");
  if (std::isinf(a)) {
    return piecewise(integrand, geometric_breaks(omega, std::max(decay_point(f), omega)), true, tol,
                     method);
  }
  return piecewise(integrand, geometric_breaks(omega, a), false, tol, method);
}

}  // namespace

OracleReport stieltjes_quadrature(const EntireFunction& f, double omega, double a, double lambda,
                                  double tol) {
  auto integrand = [&](double x) { return f.eval(x) * std::pow(omega + x, -lambda); };
  return kernel_quadrature(f, omega, a, tol, integrand, "quadrature (Stieltjes kernel)");
}

OracleReport sqrt_transform_quadrature(const EntireFunction& f, double omega, double a,
                                       double tol) {
  auto integrand = [&](double x) { return f.eval(x) / std::hypot(omega, x); };
  return kernel_quadrature(f, omega, a, tol, integrand, "quadrature (sqrt kernel)");
}

OracleReport kummer_u_quadrature(const apps::KummerParams& p, double tol) {
  p.validate();
  const auto f = power_exp(p.n);
  auto q = stieltjes_quadrature(f, p.omega, kInfinity, p.lambda(), tol);
  const double scale = std::pow(p.omega, p.alpha) / std::tgamma(static_cast<double>(p.n));
  q.value *= scale;
  q.error_estimate *= scale;
  q.method = "quadrature (Kummer integral representation)";
  return q;
}

OracleReport gauss2f1_quadrature(const apps::Gauss2F1Params& p, double tol) {
  p.validate();
  const auto f = beta_poly(p.r, p.s);
  const double omega = 1.0 / p.zeta;
  auto q = stieltjes_quadrature(f, omega, 1.0, p.lambda(), tol);
  // ₂F₁ = ζ^{-λ} (s-1)!/((r-1)!(s-r-1)!) ∫_0^1 x^{r-1}(1-x)^{s-r-1}/(ζ^{-1}+x)^λ dx
  const double scale = std::pow(p.zeta, -p.lambda()) *
                       std::exp(std::lgamma(p.s + 0.0) - std::lgamma(p.r + 0.0) -
                                std::lgamma(p.s - p.r + 0.0));
  q.value *= scale;
  q.error_estimate *= scale;
  q.method = "quadrature (Euler integral)";
  return q;
}

OracleReport gaussian_sqrt_quadrature(double alpha, double beta, double omega, double tol) {
  if (!(alpha > 0.0)) throw DomainError("alpha must be positive");
  return sqrt_transform_quadrature(gauss_exp(alpha, beta), omega, kInfinity, tol);
}

double bessel_k0_classical(double x) {
  if (!(x > 0.0)) throw DomainError("bessel_k0_classical: x must be positive");
  const double q = 0.25 * x * x;
  double term = 1.0;  // (x²/4)^k/(k!)²
  double i0 = 1.0;
  double correction = 0.0;
  double harmonic = 0.0;
  for (int k = 1; k < 500; ++k) {
    term *= q / (static_cast<double>(k) * k);
    harmonic += 1.0 / k;
    i0 += term;
    correction += term * harmonic;
    if (term * harmonic < 1e-18 * std::fabs(correction) && term < 1e-18 * i0) break;
  }
  return -(std::log(0.5 * x) + specfun::euler_gamma) * i0 + correction;
}

}  // namespace fpst::reference
