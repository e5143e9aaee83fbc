#include "doctest.h"

#include <cmath>

#include "fpst/apps.hpp"
#include "fpst/entire.hpp"
#include "fpst/reference.hpp"
#include "fpst/stieltjes.hpp"

using namespace fpst;

namespace {
double rel(double got, double want) { return std::fabs(got - want) / std::max(1e-300, std::fabs(want)); }
}  // namespace

TEST_CASE("zero function transforms to zero") {
  const auto r = eval_stieltjes(zero_function(), {0.3, 1.0, 1, 0.5});
  CHECK(r.total == 0.0);
  CHECK(r.singular_term == 0.0);
  CHECK_THROWS_AS((void)zero_order(zero_function()), DomainError);
}

TEST_CASE("expansion matches quadrature") {
  struct Case {
    EntireFunction f;
    StieltjesQuery q;
  };
  const Case cases[] = {
      {exp_neg(), {0.1, kInfinity, 1, 0.5}},
      {exp_neg(), {0.5, kInfinity, 2, 0.3}},
      {power_exp(2), {0.05, kInfinity, 1, 0.7}},
      {gauss_exp(1.0, 0.5), {0.2, kInfinity, 1, 0.25}},
      {beta_poly(2, 4), {0.3, 1.0, 1, 0.5}},
      {exponential(1.0), {0.25, 1.0, 3, 0.5}},
      {monomial(3), {0.1, 2.0, 2, 0.6}},
  };
  for (const auto& c : cases) {
    const auto e = eval_stieltjes(c.f, c.q);
    const auto o = reference::stieltjes_quadrature(c.f, c.q.omega, c.q.a, c.q.lambda());
    CHECK(rel(e.total, o.value) < 1e-9);
    CHECK(e.total == doctest::Approx(e.naive_sum() + e.singular_term));
    CHECK(e.terms_used == static_cast<int>(e.naive_partial_sums.size()));
  }
}

TEST_CASE("query validation") {
  CHECK_THROWS_AS((void)eval_stieltjes(exp_neg(), {0.0, kInfinity, 1, 0.5}), DomainError);
  CHECK_THROWS_AS((void)eval_stieltjes(exp_neg(), {0.1, kInfinity, 0, 0.5}), DomainError);
  CHECK_THROWS_AS((void)eval_stieltjes(exp_neg(), {0.1, kInfinity, 1, 1.0}), DomainError);
  CHECK_THROWS_AS((void)eval_stieltjes(exp_neg(), {0.1, -1.0, 1, 0.5}), DomainError);
}

TEST_CASE("omega at or beyond a does not converge") {
  CHECK_THROWS_AS((void)eval_stieltjes(exp_neg(), {1.2, 1.0, 1, 0.5}), ConvergenceError);
  CHECK_THROWS_AS((void)eval_stieltjes(exp_neg(), {1.0, 1.0, 1, 0.5}), ConvergenceError);
}

TEST_CASE("dominant term") {
  const StieltjesQuery q{1e-6, kInfinity, 1, 0.5};
  const auto d = dominant_term(exp_neg(), q);
  CHECK(d.source == DominantSource::singular);
  CHECK(d.zero_order == 0);
  CHECK(d.power == doctest::Approx(-0.5));
  CHECK(d.coefficient == doctest::Approx(2.0));
  CHECK(rel(eval_stieltjes(exp_neg(), q).total, d.predict(q.omega)) < 1e-2);

  const StieltjesQuery q2{1e-6, 1.0, 1, 0.5};
  const auto d2 = dominant_term(monomial(2), q2);
  CHECK(d2.source == DominantSource::naive);
  CHECK(d2.zero_order == 2);
  CHECK(d2.power == 0.0);
  CHECK(d2.coefficient == doctest::Approx(2.0 / 3.0));
  CHECK(rel(eval_stieltjes(monomial(2), q2).total, d2.predict(q2.omega)) < 1e-4);
  CHECK(to_string(DominantSource::singular) == "singular");

  CHECK(zero_order(power_exp(4)) == 3);
}

TEST_CASE("square-root kernel against K0") {
  const auto f = gauss_exp(1.0, 0.0);
  for (double w : {0.05, 0.3, 1.0}) {
    const double x = 0.5 * w * w;
    const double ref = 0.5 * std::exp(x) * reference::bessel_k0_classical(x);
    CHECK(rel(eval_sqrt_transform(f, w, kInfinity).total, ref) < 1e-10);
  }
}

TEST_CASE("square-root kernel on a finite interval") {
  const auto f = exp_neg();
  const double a = 2.0;
  const double w = 0.4;
  const auto e = eval_sqrt_transform(f, w, a);
  const auto o = reference::sqrt_transform_quadrature(f, w, a);
  CHECK(rel(e.total, o.value) < 1e-10);
  CHECK(e.singular_term == doctest::Approx(sqrt_singular_term(f, w).value));
}
