#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "fpst/apps.hpp"
#include "fpst/entire.hpp"
#include "fpst/fpi.hpp"
#include "fpst/specfun.hpp"

using namespace fpst;

namespace {
double factorial(int k) { return std::tgamma(k + 1.0); }
double sign_pow(int k) { return k % 2 == 0 ? 1.0 : -1.0; }

bool close(double got, double want, double tol) {
  return std::fabs(got - want) <= tol * std::max(1.0, std::fabs(want));
}
}  // namespace

TEST_CASE("origin finite part of a monomial") {
  CHECK(fp_origin_noninteger(monomial(5), 1.0, 2.5).value == doctest::Approx(2.0 / 7.0).epsilon(1e-15));
  // x^0 / x^{1.5} on (0, 4]: 4^{-0.5}/(-0.5)
  CHECK(fp_origin_noninteger(monomial(0), 4.0, 1.5).value == doctest::Approx(-1.0).epsilon(1e-15));
}

TEST_CASE("integer order keeps the logarithm") {
  CHECK(fp_origin_integer(monomial(0), 2.0, 1).value == doctest::Approx(std::log(2.0)).epsilon(1e-15));
  // e^{-x}/x^2 on (0, 1]: -1 + (-1) ln 1 + Σ_{k>=2} (-1)^k/(k!(k-1))
  double expected = -1.0;
  for (int k = 2; k < 30; ++k) expected += sign_pow(k) / (factorial(k) * (k - 1));
  CHECK(fp_origin_integer(exp_neg(), 1.0, 2).value == doctest::Approx(expected).epsilon(1e-14));
  CHECK_THROWS_AS((void)fp_origin_integer(exp_neg(), 1.0, 0), DomainError);
}

TEST_CASE("beta polynomial on (0, 1] is a ratio of gammas") {
  for (int r : {1, 2, 3}) {
    for (int s = r + 1; s <= r + 4; ++s) {
      for (int j : {0, 1, 3}) {
        const double lambda = 1.35;
        const double fp = fp_origin_noninteger(beta_poly(r, s), 1.0, lambda + j).value;
        const double ratio = factorial(s - r - 1) * specfun::gamma_ratio(r - lambda - j, s - lambda - j);
        const double sum = factorial(s - r - 1) * apps::b_coefficient_sum(r, s, lambda, j);
        CHECK(close(fp, ratio, 1e-13));
        CHECK(close(fp, sum, 1e-13));
      }
    }
  }
}

TEST_CASE("endpoint finite part of a constant") {
  CHECK(fp_endpoint(monomial(0), 1.0, 1.5).value == doctest::Approx(-2.0).epsilon(1e-15));
}

TEST_CASE("endpoint finite part of the reflected beta polynomial") {
  const double n = 1;
  const double alpha = 0.4;
  const double lambda = n + alpha;
  for (int r : {1, 2}) {
    for (int s = r + 1; s <= r + 3; ++s) {
      for (double zeta : {1.5, 3.0}) {
        double sum = 0.0;
        for (int j = r - 1; j <= s - 2; ++j) {
          sum += sign_pow(r - 1) * apps::m_coefficient_sum(lambda, j) * factorial(j) /
                 (factorial(j - r + 1) * factorial(s - j - 2) * std::pow(zeta, j));
        }
        const double expected = factorial(s - r - 1) * std::pow(zeta, lambda - 1) * sum;
        const double got = fp_endpoint(reflect(beta_poly(r, s)), 1.0 / zeta, lambda).value;
        CHECK(close(got, expected, 1e-13));
      }
    }
  }
}

TEST_CASE("endpoint finite part of e^x(-x)^{n-1} matches the double sum") {
  for (int n : {1, 2, 3}) {
    for (double alpha : {0.25, 0.5}) {
      const double omega = 0.7;
      double sum = 0.0;
      for (int r = 0; r < 40; ++r) {
        for (int l = 0; l < n; ++l) {
          sum += sign_pow(r + l) * std::pow(omega, r) /
                 ((r + l - alpha - n + 1) * factorial(l) * factorial(r) * factorial(n - l - 1));
        }
      }
      const double expected = sign_pow(n - 1) * std::exp(omega) * factorial(n - 1) / std::pow(omega, alpha) * sum;
      const double got = fp_endpoint(reflect(power_exp(n)), omega, n + alpha).value;
      CHECK(close(got, expected, 1e-13));
      CHECK(close(fp_singular_term(power_exp(n), omega, n, alpha).value, -expected, 1e-13));
    }
  }
}

TEST_CASE("singular term of a constant") {
  for (double omega : {0.01, 0.5, 2.0}) {
    CHECK(fp_singular_term(monomial(0), omega, 1, 0.5).value ==
          doctest::Approx(2.0 / std::sqrt(omega)).epsilon(1e-15));
  }
}

TEST_CASE("singular term equals minus the reflected endpoint finite part") {
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 20; ++i) {
    const int n = 1 + static_cast<int>(3 * u(rng));
    const double alpha = 0.05 + 0.9 * u(rng);
    const double omega = 0.05 + 1.5 * u(rng);
    const auto f = gauss_exp(0.2 + u(rng), u(rng) - 0.5);
    const double lhs = fp_singular_term(f, omega, n, alpha).value;
    const double rhs = -fp_endpoint(reflect(f), omega, n + alpha).value;
    CHECK(close(lhs, rhs, 1e-12));
  }
}

TEST_CASE("gaussian integer-order finite parts") {
  const auto g = gauss_exp(1.0, 0.0);
  CHECK(fp_origin_integer_infinite(g, 1).value == doctest::Approx(-specfun::euler_gamma / 2).epsilon(1e-14));
  CHECK(fp_origin_integer_infinite(g, 2).value == doctest::Approx(-std::sqrt(std::numbers::pi)).epsilon(1e-14));
  CHECK(fp_origin_integer(g, kInfinity, 1).value == doctest::Approx(-specfun::euler_gamma / 2).epsilon(1e-14));
  for (int m : {1, 2, 3, 4, 5}) {
    for (double beta : {-0.8, 0.0, 0.6}) {
      const double a = fp_origin_integer_infinite(gauss_exp(0.7, beta), m).value;
      const double b = fp_gaussian_split(0.7, beta, m).value;
      CHECK(close(a, b, 1e-12));
    }
  }
  CHECK_THROWS_AS((void)fp_origin_integer_infinite(exp_neg(), 1), MissingClosedFormError);
}

TEST_CASE("a = infinity catalog") {
  for (double rho : {0.5, 1.3, 2.5, 3.7}) {
    CHECK(fp_origin_noninteger(exp_neg(), kInfinity, rho).value ==
          doctest::Approx(specfun::gamma(1 - rho)).epsilon(1e-14));
    CHECK(fp_origin_noninteger(exponential(-2.0), kInfinity, rho).value ==
          doctest::Approx(specfun::gamma(1 - rho) * std::pow(2.0, rho - 1)).epsilon(1e-14));
    CHECK(fp_origin_noninteger(power_exp(3), kInfinity, rho).value ==
          doctest::Approx(specfun::gamma(3 - rho)).epsilon(1e-14));
  }
  CHECK_THROWS_AS((void)fp_origin_noninteger(beta_poly(1, 3), kInfinity, 1.5), MissingClosedFormError);
  CHECK_THROWS_AS((void)fp_origin_noninteger(exp_neg(), 1.0, 2.0), DomainError);
}

TEST_CASE("epsilon oracle agrees with the e^{-x} closed form") {
  for (int j = 0; j <= 6; ++j) {
    const double rho = j + 0.5;
    const auto oracle = fp_epsilon_oracle_origin(exp_neg(), kInfinity, rho, default_origin_ladder(rho));
    CHECK(close(oracle.value, specfun::gamma(1 - rho), 1e-6));
  }
  const auto g = gauss_exp(0.6, 0.3);
  const double rho = 2.3;
  const auto oracle = fp_epsilon_oracle_origin(g, kInfinity, rho, default_origin_ladder(rho));
  CHECK(close(oracle.value, fp_origin_noninteger(g, kInfinity, rho).value, 1e-7));
}

TEST_CASE("endpoint epsilon oracle") {
  const auto g = reflect(power_exp(2));
  const double c = 0.8;
  const auto oracle = fp_epsilon_oracle(g, c, 2, 0.3, default_endpoint_ladder(c));
  CHECK(close(oracle.value, fp_endpoint(g, c, 2.3).value, 1e-7));
}

TEST_CASE("ladder and parameter validation") {
  CHECK_THROWS_AS(EpsilonLadder::geometric(0.1, 0.5, 3, 2).validate(), DomainError);
  CHECK_THROWS_AS(EpsilonLadder::geometric(0.1, 0.5, 6, 6).validate(), DomainError);
  CHECK_THROWS_AS((EpsilonLadder{{0.1, 0.2, 0.05, 0.01}, 2}).validate(), DomainError);
  CHECK_NOTHROW(default_endpoint_ladder(1.0).validate());
  CHECK_NOTHROW(default_origin_ladder(3.5).validate());
  CHECK_NOTHROW(default_origin_ladder(1.5, 0.1).validate());

  CHECK_THROWS_AS((void)fp_singular_term(exp_neg(), 0.5, 1, 0.0), DomainError);
  CHECK_THROWS_AS((void)fp_singular_term(exp_neg(), 0.5, 1, 1.0), DomainError);
  CHECK_THROWS_AS((void)fp_singular_term(exp_neg(), 0.5, 0, 0.5), DomainError);
  CHECK_THROWS_AS((void)fp_epsilon_oracle(exp_neg(), 0.1, 1, 0.5, default_endpoint_ladder(1.0)), DomainError);
  CHECK(is_integer_order(3.0));
  CHECK_FALSE(is_integer_order(3.5));
}
