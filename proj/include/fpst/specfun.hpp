#pragma once

#include <numbers>

namespace fpst::specfun {

inline constexpr double euler_gamma = std::numbers::egamma;

/// Finite real parameter. Construction rejects NaN and ±∞.
class RealParam {
 public:
  explicit RealParam(double value);
  [[nodiscard]] double value() const noexcept { return value_; }
  operator double() const noexcept { return value_; }

 private:
  double value_;
};

/// ln|Γ(x)| together with the sign of Γ(x).
struct SignedLogGamma {
  double log_abs;
  int sign;
};

/// True when x is a non-positive integer (a pole of Γ and ψ).
[[nodiscard]] bool is_nonpositive_integer(double x) noexcept;

/// Γ(x). Throws PoleError at x = 0, -1, -2, ...
[[nodiscard]] double gamma(double x);

/// ln|Γ(x)| and sign Γ(x). Throws PoleError at the poles.
[[nodiscard]] SignedLogGamma lgamma_signed(double x);

/// Γ(a)/Γ(b) through signed log-gamma, so arguments far into the negative
/// axis stay well conditioned. Returns 0 when b is a pole and a is not.
[[nodiscard]] double gamma_ratio(double a, double b);

/// ψ(x): upward recurrence to x >= 10, then the asymptotic series;
/// reflection for x < 0.
[[nodiscard]] double digamma(double x);

/// H_s = ψ(s + 1) + γ for real s (including half-integers).
[[nodiscard]] double harmonic(double s);

/// Generalized binomial coefficient μ(μ-1)...(μ-j+1)/j! as a running product.
[[nodiscard]] double binom_real(double mu, int j);

[[nodiscard]] double erfc(double x);

}  // namespace fpst::specfun
