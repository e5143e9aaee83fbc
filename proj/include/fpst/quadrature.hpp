#pragma once

#include <functional>

namespace fpst::quad {

using Integrand = std::function<double(double)>;

struct QuadResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  long evaluations = 0;
};

struct QuadOptions {
  double rel_tol = 1e-12;
  double abs_tol = 0.0;
  int max_subdivisions = 4000;
  /// When non-zero, the integrand is known to behave like (hi - x)^{-p} at
  /// the upper end (0 < p < 1) and the substitution u = (hi - x)^{1-p} is
  /// applied. `lo_exponent` is the analogue for (x - lo)^{-p}.
  double lo_exponent = 0.0;
  double hi_exponent = 0.0;
};

/// Globally adaptive 21-point Gauss–Kronrod quadrature on [lo, hi].
/// Throws QuadratureError when the subdivision budget runs out or the
/// integrand returns a non-finite sample.
[[nodiscard]] QuadResult integrate(const Integrand& f, double lo, double hi,
                                   const QuadOptions& options);
[[nodiscard]] QuadResult integrate(const Integrand& f, double lo, double hi, double tol);

/// ∫_lo^∞ f via x = lo + t/(1 - t). The integrand must decay at least like
/// a power > 1; a tail that refuses to settle is reported as
/// QuadratureError.
[[nodiscard]] QuadResult integrate_semi_infinite(const Integrand& f, double lo,
                                                 const QuadOptions& options);
[[nodiscard]] QuadResult integrate_semi_infinite(const Integrand& f, double lo, double tol);

}  // namespace fpst::quad
