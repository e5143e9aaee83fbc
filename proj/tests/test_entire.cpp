#include "doctest.h"

#include <cmath>
#include <random>

#include "fpst/entire.hpp"
#include "fpst/specfun.hpp"

using namespace fpst;

namespace {
double factorial(int k) { return std::tgamma(k + 1.0); }

// Taylor coefficients of e^x (-x)^{n-1} about ω, in closed form.
double m_k_closed(int n, double omega, int k) {
  double sum = 0.0;
  for (int l = 0; l <= std::min(k, n - 1); ++l) {
    sum += factorial(k) / (factorial(l) * factorial(k - l)) * factorial(n - 1) *
           std::pow(omega, n - 1 - l) / factorial(n - l - 1);
  }
  return std::exp(omega) * ((n - 1) % 2 == 0 ? 1.0 : -1.0) * sum;
}

// Taylor coefficients of (-x)^{r-1}(1+x)^{s-r-1} about z, in closed form.
double m_k_beta(int r, int s, double z, int k) {
  double sum = 0.0;
  for (int j = std::max(k, r - 1); j <= s - 2; ++j) {
    sum += factorial(j) * std::pow(z, j - k) /
           (factorial(j - r + 1) * factorial(s - j - 2) * factorial(j - k));
  }
  return ((r - 1) % 2 == 0 ? 1.0 : -1.0) * factorial(s - r - 1) * sum;
}
}  // namespace

TEST_CASE("family coefficients") {
  const auto e = exponential(-2.0);
  for (int k = 0; k < 10; ++k) CHECK(e.coeff(k) == doctest::Approx(std::pow(-2.0, k) / factorial(k)));
  CHECK(e.eval(0.7) == doctest::Approx(std::exp(-1.4)).epsilon(1e-15));

  const auto b = beta_poly(2, 4);  // x(1-x)
  CHECK(b.coeff(0) == 0.0);
  CHECK(b.coeff(1) == 1.0);
  CHECK(b.coeff(2) == -1.0);
  CHECK(b.coeff(3) == 0.0);
  REQUIRE(b.degree().has_value());
  CHECK(*b.degree() == 2);

  const auto p = power_exp(3);  // e^{-x} x^2
  CHECK(p.coeff(0) == 0.0);
  CHECK(p.coeff(1) == 0.0);
  CHECK(p.coeff(2) == doctest::Approx(1.0));
  CHECK(p.coeff(5) == doctest::Approx(-1.0 / 6.0));

  CHECK(monomial(4).coeff(4) == 1.0);
  CHECK(monomial(4).coeff(3) == 0.0);
  CHECK(zero_function().coeff(7) == 0.0);
}

TEST_CASE("gaussian coefficients match the series product") {
  const double alpha = 0.7;
  const double beta = 1.3;
  const auto g = gauss_exp(alpha, beta);
  for (int k = 0; k < 12; ++k) {
    double expected = 0.0;
    for (int i = 0; 2 * i <= k; ++i) {
      expected += std::pow(-alpha, i) / factorial(i) * std::pow(beta, k - 2 * i) / factorial(k - 2 * i);
    }
    CHECK(g.coeff(k) == doctest::Approx(expected).epsilon(1e-14));
  }
  // c_3 = β³/6 - αβ
  CHECK(g.coeff(3) == doctest::Approx(beta * beta * beta / 6 - alpha * beta).epsilon(1e-15));
  CHECK(g.taylor_eval(0.4) == doctest::Approx(std::exp(-alpha * 0.16 + beta * 0.4)).epsilon(1e-14));
}

TEST_CASE("shift of exp and x^2") {
  const auto s = shift(exp_neg(), 0.5, 6);
  for (int k = 0; k <= 6; ++k) {
    CHECK(s.coeffs[k] == doctest::Approx(std::exp(-0.5) * std::pow(-1.0, k) / factorial(k)).epsilon(1e-14));
  }
  const auto q = shift(monomial(2), -1.5, 4);
  CHECK(q.coeffs[0] == doctest::Approx(2.25));
  CHECK(q.coeffs[1] == doctest::Approx(-3.0));
  CHECK(q.coeffs[2] == doctest::Approx(1.0));
  CHECK(q.coeffs[3] == 0.0);
}

TEST_CASE("shift of e^x(-x)^{n-1} reproduces the closed-form coefficients") {
  for (int n : {1, 2, 4}) {
    const double omega = 0.3;
    const auto g = reflect(power_exp(n));
    const auto s = shift(g, omega, 10);
    for (int k = 0; k <= 10; ++k) {
      CHECK(s.coeffs[k] == doctest::Approx(m_k_closed(n, omega, k) / factorial(k)).epsilon(1e-13));
    }
  }
}

TEST_CASE("shift of the reflected beta polynomial") {
  const int r = 2;
  const int s = 5;
  const double z = 0.4;
  const auto sh = shift(reflect(beta_poly(r, s)), z, s);
  for (int k = 0; k <= s - 2; ++k) {
    CHECK(sh.coeffs[k] == doctest::Approx(m_k_beta(r, s, z, k) / factorial(k)).epsilon(1e-13));
  }
  CHECK(std::fabs(sh.coeffs[s - 1]) < 1e-15);
}

TEST_CASE("reflect and translate views") {
  const auto f = gauss_exp(0.5, 0.2);
  const auto r = reflect(f);
  CHECK(r.family() == Family::reflected);
  CHECK(r.base() != nullptr);
  for (int k = 0; k < 8; ++k) CHECK(r.coeff(k) == doctest::Approx(std::pow(-1.0, k) * f.coeff(k)));
  CHECK(r.eval(0.3) == doctest::Approx(f.eval(-0.3)).epsilon(1e-15));

  const auto t = translate(f, 0.6);
  CHECK(t.eval(0.1) == doctest::Approx(f.eval(0.7)).epsilon(1e-14));
  CHECK(t.taylor_eval(0.1) == doctest::Approx(f.eval(0.7)).epsilon(1e-13));
}

TEST_CASE("shift composition") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const auto f = gauss_exp(0.3, 0.8);
  for (int i = 0; i < 20; ++i) {
    const double a = u(rng);
    const double b = u(rng);
    const auto direct = shift(f, a + b, 8);
    const auto twice = shift(translate(f, a), b, 8);
    for (int k = 0; k <= 8; ++k) {
      CHECK(std::fabs(direct.coeffs[k] - twice.coeffs[k]) <= 1e-12 * std::max(1.0, std::fabs(direct.coeffs[k])));
    }
  }
}

TEST_CASE("coefficient text parsing") {
  const auto f = parse_coefficient_text("# a polynomial\n0 1.5\n3 -2\n3 0.5\n");
  CHECK(f.coeff(0) == 1.5);
  CHECK(f.coeff(1) == 0.0);
  CHECK(f.coeff(3) == -1.5);
  CHECK(*f.degree() == 3);

  const auto j = parse_coefficient_text(R"([[0, 2.0], {"k": 2, "c": -1.0}])");
  CHECK(j.coeff(0) == 2.0);
  CHECK(j.coeff(2) == -1.0);
  CHECK(j.eval(2.0) == doctest::Approx(-2.0));

  CHECK_THROWS_AS((void)parse_coefficient_text("0 abc\n"), DomainError);
  CHECK_THROWS_AS((void)parse_coefficient_text("-1 2\n"), DomainError);
  CHECK_THROWS_AS((void)load_coefficient_file("/nonexistent/coeffs.txt"), Error);
}

TEST_CASE("registry keys") {
  CHECK(function_from_key("exp_neg").coeff(2) == doctest::Approx(0.5));
  CHECK(function_from_key("exp[3]").coeff(1) == doctest::Approx(3.0));
  CHECK(function_from_key("power_exp[2]").coeff(1) == doctest::Approx(1.0));
  CHECK(function_from_key("beta_poly[1,3]").coeff(1) == doctest::Approx(-1.0));
  CHECK(function_from_key("gauss_exp[1,0]").coeff(2) == doctest::Approx(-1.0));
  CHECK(function_from_key("monomial[3]").coeff(3) == 1.0);
  CHECK(function_from_key("zero").coeff(0) == 0.0);
  CHECK_THROWS_AS((void)function_from_key("sinh"), DomainError);
  CHECK_THROWS_AS((void)function_from_key("beta_poly[3,2]"), DomainError);
  CHECK(builtin_library().size() >= 6);
}
