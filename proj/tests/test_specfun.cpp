#include "doctest.h"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "fpst/quadrature.hpp"
#include "fpst/series.hpp"
#include "fpst/specfun.hpp"

using namespace fpst;
namespace sf = fpst::specfun;
using sf::binom_real;
using sf::digamma;
using sf::euler_gamma;
using sf::gamma_ratio;
using sf::harmonic;
using sf::lgamma_signed;
using sf::RealParam;

namespace {
constexpr double kPi = std::numbers::pi;

// Γ(1.3) = ∫_0^∞ t^{0.3} e^{-t} dt, independent of libm's gamma.
double gamma_1_3_oracle() {
  return quad::integrate_semi_infinite([](double t) { return std::pow(t, 0.3) * std::exp(-t); }, 0.0,
                                       1e-15)
      .value;
}

double erfc_series(double x) {
  double term = x;
  double sum = x;
  for (int n = 1; n < 200; ++n) {
    term *= -x * x / n;
    sum += term / (2 * n + 1);
  }
  return 1.0 - 2.0 / std::sqrt(kPi) * sum;
}
}  // namespace

TEST_CASE("gamma at classical points") {
  CHECK(sf::gamma(1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(sf::gamma(0.5) == doctest::Approx(std::sqrt(kPi)).epsilon(1e-14));
  double product = gamma_1_3_oracle();
  for (double x = 1.3; x < 7.0; x += 1.0) product *= x;
  CHECK(sf::gamma(7.3) == doctest::Approx(product).epsilon(1e-12));
  CHECK(sf::gamma(-0.5) == doctest::Approx(-2.0 * std::sqrt(kPi)).epsilon(1e-14));
}

TEST_CASE("gamma poles raise") {
  CHECK_THROWS_AS((void)sf::gamma(0.0), PoleError);
  CHECK_THROWS_AS((void)sf::gamma(-3.0), PoleError);
  CHECK_THROWS_AS((void)lgamma_signed(-1.0), PoleError);
  CHECK_THROWS_AS((void)digamma(-2.0), PoleError);
}

TEST_CASE("signed log gamma and gamma ratio") {
  const auto lg = lgamma_signed(-2.5);
  CHECK(lg.sign == -1);
  CHECK(std::exp(lg.log_abs) * lg.sign == doctest::Approx(sf::gamma(-2.5)).epsilon(1e-13));
  CHECK(gamma_ratio(-3.5, -4.5) == doctest::Approx(-4.5).epsilon(1e-13));
  CHECK(gamma_ratio(2.5, -2.0) == 0.0);
}

TEST_CASE("digamma") {
  CHECK(digamma(1.0) == doctest::Approx(-euler_gamma).epsilon(1e-14));
  CHECK(digamma(0.5) == doctest::Approx(-euler_gamma - 2.0 * std::log(2.0)).epsilon(1e-14));
  CHECK(digamma(5.0) == doctest::Approx(-euler_gamma + 1.0 + 0.5 + 1.0 / 3 + 0.25).epsilon(1e-14));
  CHECK(digamma(-0.5) == doctest::Approx(digamma(0.5) + 2.0).epsilon(1e-13));
}

TEST_CASE("harmonic numbers") {
  CHECK(harmonic(0.0) == 0.0);
  CHECK(harmonic(3.0) == doctest::Approx(11.0 / 6.0).epsilon(1e-15));
  CHECK(harmonic(-0.5) == doctest::Approx(-2.0 * std::log(2.0)).epsilon(1e-14));
  CHECK(harmonic(0.5) == doctest::Approx(2.0 - 2.0 * std::log(2.0)).epsilon(1e-14));
  CHECK_THROWS_AS((void)harmonic(-1.0), PoleError);
}

TEST_CASE("binom_real") {
  CHECK(binom_real(-1.5, 0) == 1.0);
  CHECK(binom_real(-1.5, 1) == -1.5);
  CHECK(binom_real(-2.5, 3) == doctest::Approx(-6.5625).epsilon(1e-15));
  CHECK(binom_real(5.0, 7) == 0.0);
}

TEST_CASE("erfc") {
  CHECK(sf::erfc(0.0) == 1.0);
  CHECK(sf::erfc(10.0) < 1e-44);
  const double q = 2.0 / std::sqrt(kPi) *
                   quad::integrate_semi_infinite([](double t) { return std::exp(-t * t); }, 0.5, 1e-15).value;
  CHECK(sf::erfc(0.5) == doctest::Approx(erfc_series(0.5)).epsilon(1e-13));
  CHECK(sf::erfc(0.5) == doctest::Approx(q).epsilon(1e-13));
}

TEST_CASE("RealParam rejects non-finite values") {
  CHECK_THROWS_AS(RealParam(std::nan("")), DomainError);
  CHECK_THROWS_AS(RealParam(std::numeric_limits<double>::infinity()), DomainError);
  CHECK(RealParam(0.25).value() == 0.25);
}

TEST_CASE("recurrences and reflection on random arguments") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const double x = 0.1 + 29.9 * u(rng);
    CHECK(std::fabs(sf::gamma(x + 1) - x * sf::gamma(x)) / sf::gamma(x + 1) < 1e-12);
    CHECK(std::fabs(digamma(x + 1) - digamma(x) - 1.0 / x) < 1e-12);
  }
  for (int i = 0; i < 200; ++i) {
    const double x = 0.002 + 0.996 * u(rng);
    if (std::fabs(x - 0.5) < 1e-3) continue;
    CHECK(std::fabs(sf::gamma(x) * sf::gamma(1 - x) * std::sin(kPi * x) / kPi - 1.0) < 1e-11);
  }
  for (int i = 0; i < 200; ++i) {
    const double mu = -8.0 + 16.0 * u(rng);
    const int j = 1 + static_cast<int>(20 * u(rng));
    const double lhs = binom_real(mu, j);
    const double rhs = binom_real(mu - 1, j) + binom_real(mu - 1, j - 1);
    CHECK(std::fabs(lhs - rhs) <= 1e-12 * std::max(std::fabs(lhs), 1e-300) + 1e-300);
  }
}
