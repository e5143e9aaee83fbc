#include "fpst/apps.hpp"

#include <cmath>
#include <numbers>

#include "fpst/entire.hpp"
#include "fpst/fpi.hpp"
#include "fpst/specfun.hpp"

namespace fpst::apps {

namespace {

using specfun::gamma_ratio;

constexpr double kPi = std::numbers::pi;

void require_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0) || is_integer_order(alpha)) {
    throw DomainError("alpha must lie strictly inside (0, 1)");
  }
}

double factorial(int k) { return std::tgamma(k + 1.0); }

// ω^j/(j! Γ(j+α+1)) through logarithms.
double power_over_gammas(double omega, int j, double alpha) {
  return std::exp(j * std::log(omega) - std::lgamma(j + 1.0) - std::lgamma(j + alpha + 1.0));
}

}  // namespace

void Gauss2F1Params::validate() const {
  if (n < 1) throw DomainError("n must be a positive integer");
  require_alpha(alpha);
  if (r < 1) throw DomainError("r must be a positive integer");
  if (s < r + 1) throw DomainError("s must satisfy s >= r + 1");
  if (!(zeta > 1.0) || !std::isfinite(zeta)) throw DomainError("zeta must be finite and > 1");
}

void KummerParams::validate() const {
  if (n < 1) throw DomainError("n must be a positive integer");
  require_alpha(alpha);
  if (!(omega > 0.0) || !std::isfinite(omega)) throw DomainError("omega must be positive and finite");
}

SeriesValue gauss2f1_expansion(const Gauss2F1Params& p, const SeriesControl& control) {
  p.validate();
  const double lambda = p.lambda();
  const double z = p.zeta;
  const double pre = factorial(p.s - 1) / (factorial(p.r - 1) * std::pow(z, lambda));
  double weight = 1.0;  // C(-λ, j) ζ^{-j}
  auto series = sum_series(control, "2F1 expansion", [&](int j) {
    const double term = weight * b_coefficient(p.r, p.s, lambda, j);
    weight *= (-lambda - j) / (j + 1) / z;
    return term;
  });
  double finite = 0.0;
  for (int j = 0; j <= p.s - p.r - 1; ++j) {
    finite += std::exp(std::lgamma(j + p.r + 0.0) - std::lgamma(j + 1.0) -
                       std::lgamma(p.s - j - p.r + 0.0)) /
              specfun::gamma(j + p.r - lambda + 1.0) / std::pow(z, j);
  }
  const double sign = p.r % 2 == 0 ? 1.0 : -1.0;
  finite *= sign * factorial(p.s - 1) * specfun::gamma(1.0 - lambda) /
            (factorial(p.r - 1) * std::pow(z, p.r));
  return {pre * series.value() + finite, series.terms() + (p.s - p.r),
          pre * series.tail_estimate()};
}

SeriesValue gauss2f1_two_hypergeometric(const Gauss2F1Params& p, const SeriesControl& control) {
  p.validate();
  const double lambda = p.lambda();
  const double z = p.zeta;
  const double first = factorial(p.s - 1) * gamma_ratio(p.r - lambda, p.s - lambda) /
                       (factorial(p.r - 1) * std::pow(z, lambda)) *
                       hyp2f1_series(lambda, lambda - p.s + 1, lambda - p.r + 1, -1.0 / z, control);
  const double sign = p.r % 2 == 0 ? 1.0 : -1.0;
  const double second = sign * factorial(p.s - 1) * gamma_ratio(1.0 - lambda, p.r + 1.0 - lambda) /
                        (factorial(p.s - p.r - 1) * std::pow(z, p.r)) *
                        hyp2f1_series(p.r, p.r - p.s + 1, p.r - lambda + 1, -1.0 / z, control);
  return {first + second, 0, 0.0};
}

double gauss2f1_large_zeta(const Gauss2F1Params& p) {
  p.validate();
  const double lambda = p.lambda();
  const double sign = p.r % 2 == 0 ? 1.0 : -1.0;
  return factorial(p.s - 1) * gamma_ratio(p.r - lambda, p.s - lambda) /
             (factorial(p.r - 1) * std::pow(p.zeta, lambda)) +
         sign * factorial(p.s - 1) * gamma_ratio(1.0 - lambda, p.r - lambda + 1.0) /
             (factorial(p.s - p.r - 1) * std::pow(p.zeta, p.r));
}

double prudnikov_special_case(double zeta) {
  return 4.0 / (15.0 * zeta * zeta) * (2.0 - (2.0 + 5.0 * zeta) * std::pow(1.0 + zeta, -2.5));
}

SeriesValue kummer_u(const KummerParams& p, const SeriesControl& control) {
  p.validate();
  const double lambda = p.lambda();
  const double w = p.omega;
  auto first = sum_series(control, "Kummer U power series", [&](int j) {
    const double sign = j % 2 == 0 ? 1.0 : -1.0;
    return sign * gamma_ratio(1.0 - lambda, 1.0 - lambda - j) * power_over_gammas(w, j, p.alpha);
  });
  auto second = sum_series(control, "Kummer U exponential series", [&](int r) {
    const double sign = r % 2 == 0 ? 1.0 : -1.0;
    return sign * kummer_inner(p.n, p.alpha, r) * std::exp(r * std::log(w) - std::lgamma(r + 1.0));
  });
  const double pre1 = -kPi * std::pow(w, p.alpha) / (std::sin(kPi * p.alpha) * factorial(p.n - 1));
  const double pre2 = (p.n % 2 == 0 ? 1.0 : -1.0) * std::exp(w);
  return {pre1 * first.value() + pre2 * second.value(), first.terms() + second.terms(),
          std::fabs(pre1) * first.tail_estimate() + std::fabs(pre2) * second.tail_estimate()};
}

SeriesValue kummer_u_two_hypergeometric(const KummerParams& p, const SeriesControl& control) {
  p.validate();
  const double lambda = p.lambda();
  const double w = p.omega;
  const double first = -kPi * std::pow(w, p.alpha) /
                       (std::sin(kPi * p.alpha) * factorial(p.n - 1) * std::tgamma(1.0 + p.alpha)) *
                       hyp1f1_series(lambda, 1.0 + p.alpha, w, control);
  const double second = (p.n % 2 == 0 ? 1.0 : -1.0) * std::exp(w) *
                        gamma_ratio(1.0 - lambda, 1.0 - p.alpha) *
                        hyp1f1_series(1.0 - lambda, 1.0 - p.alpha, -w, control);
  return {first + second, 0, 0.0};
}

double kummer_u_leading(const KummerParams& p) {
  p.validate();
  return gamma_ratio(p.alpha, p.lambda()) +
         std::pow(p.omega, p.alpha) * specfun::gamma(-p.alpha) / factorial(p.n - 1);
}

double kummer_u_leading_printed(const KummerParams& p) {
  p.validate();
  return gamma_ratio(p.alpha, p.lambda()) -
         std::pow(p.omega, p.alpha) * specfun::gamma(p.alpha) / factorial(p.n - 1);
}

double kummer_u2_half_closed_form(double omega, double erfc_argument) {
  return -2.0 / 3.0 *
         (std::sqrt(kPi * omega) * std::exp(omega) * (2.0 * omega + 3.0) *
              specfun::erfc(erfc_argument) -
          2.0 * (omega + 1.0));
}

double gaussian_a_scaled(double alpha, double beta, int j) {
  double acc = 0.0;
  for (int n = 0; n <= j; ++n) {
    const int p = 2 * j - 2 * n + 1;
    acc += std::pow(beta, p) * std::pow(-alpha, n) / (factorial(p) * factorial(n));
  }
  return acc;
}

double gaussian_b_scaled(double alpha, double beta, int j) {
  double acc = 0.0;
  for (int n = 0; n <= j; ++n) {
    const int p = 2 * j - 2 * n;
    acc += std::pow(beta, p) * std::pow(-alpha, n) / (factorial(p) * factorial(n));
  }
  return acc;
}

SeriesValue gaussian_sqrt(double alpha, double beta, double omega, const SeriesControl& control) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw DomainError("alpha must be positive");
  if (!std::isfinite(beta)) throw DomainError("beta must be finite");
  if (!(omega > 0.0) || !std::isfinite(omega)) throw DomainError("omega must be positive");
  const auto f = gauss_exp(alpha, beta);
  const double w2 = omega * omega;
  const double sqrt_pi = std::sqrt(kPi);
  const double log_omega = std::log(omega);

  double weight = 1.0;  // C(-1/2, j) ω^{2j}
  double tails = 0.0;
  auto naive = sum_series(control, "Gaussian sqrt naive series", [&](int j) {
    const auto fp = fp_origin_integer_infinite(f, 2 * j + 1, control);
    const double term = weight * fp.value;
    tails += std::fabs(weight) * fp.tail_estimate;
    weight *= (-0.5 - j) / (j + 1) * w2;
    return term;
  });

  // (-1)^j j! Ã_j ω^{2j+1}/Γ(j+3/2) and (-1)^j Γ(j+1/2) B̃_j ω^{2j}/j! (H_{j-1/2} - H_j + 2 ln ω)
  double odd_ratio = 2.0 / sqrt_pi;  // j!/Γ(j+3/2)
  double even_ratio = sqrt_pi;       // Γ(j+1/2)/j!
  double power = 1.0;                // ω^{2j}
  auto correction = sum_series(control, "Gaussian sqrt correction", [&](int j) {
    const double sign = j % 2 == 0 ? 1.0 : -1.0;
    const double odd = sign * odd_ratio * gaussian_a_scaled(alpha, beta, j) * power * omega;
    const double h = specfun::harmonic(j - 0.5) - specfun::harmonic(j) + 2.0 * log_omega;
    const double even = sign * even_ratio * gaussian_b_scaled(alpha, beta, j) * power * h;
    odd_ratio *= (j + 1.0) / (j + 1.5);
    even_ratio *= (j + 0.5) / (j + 1.0);
    power *= w2;
    return -0.5 * sqrt_pi * odd - even / (2.0 * sqrt_pi);
  });
  return {naive.value() + correction.value(), naive.terms() + correction.terms(),
          naive.tail_estimate() + tails + correction.tail_estimate()};
}

double gaussian_sqrt_leading(double alpha, double beta, double omega, const SeriesControl& control) {
  if (!(alpha > 0.0)) throw DomainError("alpha must be positive");
  const double t = beta / std::sqrt(alpha);
  double series = 0.0;
  if (t != 0.0) {
    series = sum_series(control, "Gaussian sqrt leading constant", [&](int k) {
               const int n = k + 1;
               const double sign = (t < 0.0 && n % 2 == 1) ? -1.0 : 1.0;
               return sign * std::exp(std::lgamma(0.5 * n) - std::lgamma(n + 1.0) +
                                      n * std::log(std::fabs(t)));
             }).value();
  }
  return -0.5 * (std::log(alpha * omega * omega / 4.0) + specfun::euler_gamma) + 0.5 * series -
         beta * omega;
}

SeriesValue bessel_k0(double x, const SeriesControl& control) {
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("bessel_k0: x must be positive");
  if (x > 5.0) {
    throw ConvergenceError("bessel_k0: the psi-series representation cancels catastrophically for x > 5");
  }
  const double log2x = std::log(2.0 * x);
  double weight = std::sqrt(kPi);  // Γ(k+1/2)(2x)^k/k!²
  auto sum = sum_series(control, "K0 series", [&](int k) {
    const double term =
        weight * (2.0 * specfun::digamma(k + 1.0) - specfun::digamma(k + 0.5) - log2x);
    weight *= (k + 0.5) * 2.0 * x / ((k + 1.0) * (k + 1.0));
    return term;
  });
  const double pre = std::exp(-x) / std::sqrt(kPi);
  return {pre * sum.value(), sum.terms(), pre * sum.tail_estimate()};
}

double hyp2f1_series(double a, double b, double c, double z, const SeriesControl& control) {
  if (!(std::fabs(z) < 1.0)) throw DomainError("hyp2f1_series: |z| must be < 1");
  if (specfun::is_nonpositive_integer(c)) throw PoleError("hyp2f1_series: c is a non-positive integer");
  double term = 1.0;
  return sum_series(control, "2F1 series", [&](int k) {
           const double t = term;
           term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * z;
           return t;
         }).value();
}

double hyp1f1_series(double a, double b, double z, const SeriesControl& control) {
  if (specfun::is_nonpositive_integer(b)) throw PoleError("hyp1f1_series: b is a non-positive integer");
  double term = 1.0;
  return sum_series(control, "1F1 series", [&](int k) {
           const double t = term;
           term *= (a + k) / ((b + k) * (k + 1.0)) * z;
           return t;
         }).value();
}

double b_coefficient(int r, int s, double lambda, int j) {
  return gamma_ratio(r - lambda - j, s - lambda - j);
}

double b_coefficient_sum(int r, int s, double lambda, int j) {
  long double acc = 0.0L;
  const int top = s - r - 1;
  for (int k = 0; k <= top; ++k) {
    const long double sign = k % 2 == 0 ? 1.0L : -1.0L;
    acc += sign / (std::tgamma(k + 1.0L) * std::tgamma(top - k + 1.0L) * (k - lambda - j + r));
  }
  return static_cast<double>(acc);
}

double m_coefficient(double lambda, int j) { return gamma_ratio(1.0 - lambda, 2.0 + j - lambda); }

double m_coefficient_sum(double lambda, int j) {
  long double acc = 0.0L;
  for (int k = 0; k <= j; ++k) {
    const long double sign = k % 2 == 0 ? 1.0L : -1.0L;
    acc += sign / (std::tgamma(k + 1.0L) * (k + 1.0L - lambda) * std::tgamma(j - k + 1.0L));
  }
  return static_cast<double>(acc);
}

double kummer_inner(int n, double alpha, int r) {
  return gamma_ratio(1.0 - alpha - n + r, 1.0 - alpha + r);
}

double kummer_inner_sum(int n, double alpha, int r) {
  long double acc = 0.0L;
  for (int l = 0; l < n; ++l) {
    const long double sign = l % 2 == 0 ? 1.0L : -1.0L;
    acc += sign / ((r + l - alpha - n + 1.0L) * std::tgamma(l + 1.0L) * std::tgamma(n - l + 0.0L));
  }
  return static_cast<double>(acc);
}

}  // namespace fpst::apps
