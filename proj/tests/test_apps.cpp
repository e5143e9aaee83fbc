#include "doctest.h"

#include <cmath>
#include <numbers>

#include "fpst/apps.hpp"
#include "fpst/entire.hpp"
#include "fpst/reference.hpp"

using namespace fpst;
using namespace fpst::apps;

namespace {
double rel(double got, double want) { return std::fabs(got - want) / std::max(1e-300, std::fabs(want)); }
}  // namespace

TEST_CASE("hypergeometric series") {
  const double z = 0.4;
  CHECK(hyp2f1_series(1, 1, 2, z) == doctest::Approx(-std::log(1 - z) / z).epsilon(1e-14));
  CHECK(hyp1f1_series(1.7, 1.7, -0.8) == doctest::Approx(std::exp(-0.8)).epsilon(1e-14));
  CHECK_THROWS_AS((void)hyp2f1_series(1, 1, 2, 1.0), DomainError);
  CHECK_THROWS_AS((void)hyp2f1_series(1, 1, -2, 0.1), PoleError);
}

TEST_CASE("2F1 special case in closed form") {
  for (double z : {1.5, 2.0, 5.0, 10.0}) {
    CHECK(rel(gauss2f1_expansion({3, 0.5, 2, 3, z}).value, prudnikov_special_case(z)) < 1e-10);
  }
}

TEST_CASE("2F1 assemblies agree with each other and with the Euler integral") {
  for (int n : {1, 2}) {
    for (double alpha : {0.3, 0.5}) {
      for (int r : {1, 2}) {
        for (int s : {r + 1, r + 3}) {
          for (double z : {1.5, 4.0}) {
            const Gauss2F1Params p{n, alpha, r, s, z};
            const double e = gauss2f1_expansion(p).value;
            CHECK(rel(gauss2f1_two_hypergeometric(p).value, e) < 1e-10);
            CHECK(rel(reference::gauss2f1_quadrature(p).value, e) < 1e-9);
          }
        }
      }
    }
  }
  // leading behaviour: the relative gap shrinks like 1/zeta
  const Gauss2F1Params big{1, 0.5, 2, 4, 400.0};
  const Gauss2F1Params bigger{1, 0.5, 2, 4, 4000.0};
  const double gap = rel(gauss2f1_large_zeta(big), gauss2f1_expansion(big).value);
  const double smaller = rel(gauss2f1_large_zeta(bigger), gauss2f1_expansion(bigger).value);
  CHECK(gap < 2e-2);
  CHECK(smaller < gap / 5);
  CHECK_THROWS_AS((void)gauss2f1_expansion({1, 0.5, 2, 2, 3.0}), DomainError);
  CHECK_THROWS_AS((void)gauss2f1_expansion({1, 0.5, 1, 3, 0.5}), DomainError);
}

TEST_CASE("coefficient identities") {
  for (int j = 0; j < 12; ++j) {
    for (double lambda : {1.25, 2.5, 3.75}) {
      CHECK(rel(m_coefficient(lambda, j), m_coefficient_sum(lambda, j)) < 1e-11);
      for (int r : {1, 2, 3}) {
        for (int s = r + 1; s <= r + 4; ++s) {
          CHECK(rel(b_coefficient_sum(r, s, lambda, j), b_coefficient(r, s, lambda, j)) < 1e-11);
        }
      }
    }
  }
  for (int n : {1, 2, 4}) {
    for (int r = 0; r < 15; ++r) {
      CHECK(rel(kummer_inner(n, 0.35, r), kummer_inner_sum(n, 0.35, r)) < 1e-11);
    }
  }
}

TEST_CASE("Kummer U against quadrature and the two-series form") {
  for (int n : {1, 2, 3}) {
    for (double a : {0.25, 0.75}) {
      for (double w : {0.05, 0.5, 2.0}) {
        const KummerParams p{n, a, w};
        const double u = kummer_u(p).value;
        CHECK(rel(u, reference::kummer_u_quadrature(p).value) < 1e-9);
        CHECK(rel(kummer_u_two_hypergeometric(p).value, u) < 1e-10);
      }
    }
  }
}

TEST_CASE("U(2, 1/2, w) closed form takes erfc of sqrt(w)") {
  const double w = 0.3;
  const double q = reference::kummer_u_quadrature({2, 0.5, w}).value;
  CHECK(rel(kummer_u2_half_closed_form(w, std::sqrt(w)), q) < 1e-10);
  CHECK(rel(kummer_u2_half_closed_form(w, w), q) > 1e-3);
}

TEST_CASE("Kummer U leading term") {
  const KummerParams p{2, 0.4, 1e-5};
  CHECK(rel(kummer_u_leading(p), kummer_u(p).value) < 1e-3);
}

TEST_CASE("gaussian coefficients in product form") {
  const double alpha = 0.8;
  const double beta = -1.1;
  const auto g = gauss_exp(alpha, beta);
  for (int j = 0; j < 10; ++j) {
    CHECK(gaussian_a_scaled(alpha, beta, j) == doctest::Approx(g.coeff(2 * j + 1)).epsilon(1e-13));
    CHECK(gaussian_b_scaled(alpha, beta, j) == doctest::Approx(g.coeff(2 * j)).epsilon(1e-13));
  }
}

TEST_CASE("gaussian square-root transform") {
  for (double w : {0.02, 0.1, 0.6}) {
    const double v = gaussian_sqrt(1.0, 2.0, w).value;
    CHECK(rel(v, reference::gaussian_sqrt_quadrature(1.0, 2.0, w).value) < 1e-8);
  }
  CHECK(rel(gaussian_sqrt_leading(1.0, 0.5, 1e-4), gaussian_sqrt(1.0, 0.5, 1e-4).value) < 1e-3);
  CHECK_THROWS_AS((void)gaussian_sqrt(0.0, 1.0, 0.1), DomainError);
}

TEST_CASE("K0") {
  for (double x : {1e-3, 0.1, 1.0, 4.0}) {
    CHECK(rel(bessel_k0(x).value, reference::bessel_k0_classical(x)) < 1e-10);
  }
  const double x = 1e-4;
  CHECK(std::fabs(bessel_k0(x).value + std::log(0.5 * x) + std::numbers::egamma) < 1e-7);
  CHECK_THROWS_AS((void)bessel_k0(6.0), ConvergenceError);
  CHECK_THROWS_AS((void)bessel_k0(0.0), DomainError);
}
