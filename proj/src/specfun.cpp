#include "fpst/specfun.hpp"

#include <math.h>

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "fpst/series.hpp"

namespace fpst::specfun {

namespace {

void check_pole(double x, const char* fn) {
  if (is_nonpositive_integer(x)) {
    throw PoleError(std::string(fn) + ": pole at x = " + std::to_string(x));
  }
}

// B_{2k}/(2k) for k = 1..8
constexpr std::array<double, 8> kDigammaAsymptotic = {
    1.0 / 12.0,   -1.0 / 120.0,  1.0 / 252.0,     -1.0 / 240.0,
    1.0 / 132.0,  -691.0 / 32760.0, 1.0 / 12.0, -3617.0 / 8160.0};

}  // namespace

RealParam::RealParam(double value) : value_(value) {
  if (!std::isfinite(value)) {
    throw DomainError("RealParam: value must be finite");
  }
}

bool is_nonpositive_integer(double x) noexcept {
  return x <= 0.0 && std::floor(x) == x;
}

double gamma(double x) {
  check_pole(x, "gamma");
  return std::tgamma(x);
}

SignedLogGamma lgamma_signed(double x) {
  check_pole(x, "lgamma_signed");
  int sign = 1;
  // lgamma_r is the re-entrant form; std::lgamma writes the global signgam.
  const double value = ::lgamma_r(x, &sign);
  return {value, sign};
}

double gamma_ratio(double a, double b) {
  if (is_nonpositive_integer(b)) {
    check_pole(a, "gamma_ratio");
    return 0.0;
  }
  const auto num = lgamma_signed(a);
  const auto den = lgamma_signed(b);
  return num.sign * den.sign * std::exp(num.log_abs - den.log_abs);
}

double digamma(double x) {
  check_pole(x, "digamma");
  if (x < 0.0) {
    // ψ(x) = ψ(1 - x) - π cot(πx)
    return digamma(1.0 - x) - std::numbers::pi / std::tan(std::numbers::pi * x);
  }
  double shift = 0.0;
  while (x < 10.0) {
    shift -= 1.0 / x;
    x += 1.0;
  }
  const double inv2 = 1.0 / (x * x);
  double series = 0.0;
  double power = inv2;
  for (double c : kDigammaAsymptotic) {
    series += c * power;
    power *= inv2;
  }
  return shift + std::log(x) - 0.5 / x - series;
}

double harmonic(double s) {
  check_pole(s + 1.0, "harmonic");
  if (s >= 0.0 && std::floor(s) == s && s < 64.0) {
    double h = 0.0;
    for (int k = static_cast<int>(s); k >= 1; --k) h += 1.0 / k;
    return h;
  }
  return digamma(s + 1.0) + euler_gamma;
}

double binom_real(double mu, int j) {
  if (j < 0) throw DomainError("binom_real: j must be non-negative");
  double value = 1.0;
  for (int i = 0; i < j; ++i) value *= (mu - i) / (i + 1);
  return value;
}

double erfc(double x) { return std::erfc(x); }

}  // namespace fpst::specfun
