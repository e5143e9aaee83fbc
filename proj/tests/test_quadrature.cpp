#include "doctest.h"

#include <cmath>
#include <numbers>

#include "fpst/quadrature.hpp"
#include "fpst/series.hpp"

using namespace fpst;

TEST_CASE("smooth integrands") {
  CHECK(quad::integrate([](double x) { return std::sin(x); }, 0.0, std::numbers::pi, 1e-14).value ==
        doctest::Approx(2.0).epsilon(1e-14));
  CHECK(quad::integrate([](double x) { return std::exp(x); }, 0.0, 1.0, 1e-14).value ==
        doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-14));
}

TEST_CASE("semi-infinite range") {
  const auto r = quad::integrate_semi_infinite([](double x) { return std::exp(-x * x); }, 0.0, 1e-14);
  CHECK(r.value == doctest::Approx(0.5 * std::sqrt(std::numbers::pi)).epsilon(1e-13));
  CHECK(r.evaluations > 0);
  const auto p = quad::integrate_semi_infinite([](double x) { return 1.0 / (1.0 + x * x); }, 0.0, 1e-12);
  CHECK(p.value == doctest::Approx(std::numbers::pi / 2).epsilon(1e-11));
}

TEST_CASE("endpoint power singularities") {
  quad::QuadOptions opt;
  opt.rel_tol = 1e-13;
  opt.hi_exponent = 0.5;
  const auto r = quad::integrate([](double x) { return 1.0 / std::sqrt(1.0 - x); }, 0.0, 1.0, opt);
  CHECK(r.value == doctest::Approx(2.0).epsilon(1e-12));
  quad::QuadOptions lo;
  lo.rel_tol = 1e-13;
  lo.lo_exponent = 0.7;
  const auto s = quad::integrate([](double x) { return std::pow(x, -0.7); }, 0.0, 1.0, lo);
  CHECK(s.value == doctest::Approx(1.0 / 0.3).epsilon(1e-11));
}

TEST_CASE("result is stable across tolerances") {
  auto f = [](double x) { return std::exp(-x) / (x + 0.05); };
  const double a = quad::integrate(f, 0.0, 3.0, 1e-10).value;
  const double b = quad::integrate(f, 0.0, 3.0, 1e-14).value;
  CHECK(std::fabs(a - b) < 1e-9 * std::fabs(b));
}

TEST_CASE("failures are reported") {
  quad::QuadOptions opt;
  opt.max_subdivisions = 3;
  opt.rel_tol = 1e-15;
  CHECK_THROWS_AS((void)quad::integrate([](double x) { return std::sin(1.0 / (x + 1e-4)); }, 0.0, 1.0, opt),
                  QuadratureError);
  CHECK_THROWS_AS((void)quad::integrate([](double) { return std::nan(""); }, 0.0, 1.0, 1e-10), QuadratureError);
}
