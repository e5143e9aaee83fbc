#include "fpst/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>

#include "fpst/apps.hpp"
#include "fpst/cli.hpp"
#include "fpst/entire.hpp"
#include "fpst/fpi.hpp"
#include "fpst/quadrature.hpp"
#include "fpst/reference.hpp"
#include "fpst/specfun.hpp"
#include "fpst/stieltjes.hpp"

namespace fpst::verify {

namespace {

constexpr double kPi = std::numbers::pi;

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

double rel_err(double value, double ref) {
  return std::fabs(value - ref) / std::max(std::fabs(ref), 1e-300);
}

/// Worst-case tracker for a batch of comparisons.
struct Worst {
  double value = 0.0;
  std::string where;
  void update(double err, const std::string& label) {
    if (where.empty() || !(err <= value)) {  // also catches NaN
      value = err;
      where = label;
    }
  }
};

using Check = std::function<CheckResult()>;

CheckResult guarded(std::string id, std::string name, const std::function<void(CheckResult&)>& body) {
  CheckResult out{std::move(id), std::move(name), false, ""};
  try {
    body(out);
  } catch (const Error& e) {
    out.passed = false;
    out.detail += (out.detail.empty() ? "" : "; ") + std::string("error ") + e.tag() + ": " + e.what();
  } catch (const std::exception& e) {
    out.passed = false;
    out.detail += (out.detail.empty() ? "" : "; ") + std::string("exception: ") + e.what();
  }
  return out;
}

/// Least-squares slope of log|y| against log x.
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lx = std::log(x[i]);
    const double ly = std::log(std::fabs(y[i]));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

EntireFunction random_function(std::mt19937& rng) {
  std::uniform_int_distribution<int> pick(0, 5);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  switch (pick(rng)) {
    case 0: return exp_neg();
    case 1: return exponential(-2.0 + 3.0 * unit(rng));
    case 2: return power_exp(1 + static_cast<int>(3 * unit(rng)));
    case 3: return gauss_exp(0.5 + unit(rng), -1.0 + 3.0 * unit(rng));
    case 4: {
      const int r = 1 + static_cast<int>(3 * unit(rng));
      return beta_poly(r, r + 1 + static_cast<int>(4 * unit(rng)));
    }
    default: return monomial(static_cast<int>(6 * unit(rng)));
  }
}

// --- acceptance criteria -------------------------------------------------

CheckResult criterion1() {
  return guarded("C1", "Stieltjes expansion vs quadrature (e^{-x}x, n=2, alpha=0.5, a=inf)",
                 [](CheckResult& r) {
    const auto f = power_exp(2);
    Worst worst;
    double slowest = 0.0;
    for (double w : {0.05, 0.1, 0.3}) {
      const auto start = std::chrono::steady_clock::now();
      const auto e = eval_stieltjes(f, {w, kInfinity, 2, 0.5});
      const double seconds =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      slowest = std::max(slowest, seconds);
      const auto q = reference::stieltjes_quadrature(f, w, kInfinity, 2.5);
      worst.update(rel_err(e.total, q.value), "omega=" + std::to_string(w));
    }
    r.passed = worst.value < 1e-8 && slowest < 1.0;
    r.detail = "max rel err " + sci(worst.value) + " at " + worst.where + ", slowest point " +
               sci(slowest) + " s (limits 1e-8, 1 s)";
  });
}

CheckResult criterion2() {
  return guarded("C2", "Reflection identity: endpoint vs reflected origin finite part",
                 [](CheckResult& r) {
    std::mt19937 rng(20240611);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    Worst worst;
    for (int i = 0; i < 20; ++i) {
      const auto g = random_function(rng);
      const double c = 0.2 + 1.8 * unit(rng);
      const int n = 1 + static_cast<int>(3 * unit(rng));
      const double alpha = 0.05 + 0.9 * unit(rng);
      const double endpoint = fp_endpoint(g, c, n + alpha).value;
      const double origin = fp_origin_noninteger(reflect(translate(g, c)), c, n + alpha).value;
      worst.update(rel_err(endpoint, origin), g.name() + " c=" + std::to_string(c) +
                                                  " n=" + std::to_string(n) +
                                                  " alpha=" + std::to_string(alpha));
    }
    r.passed = worst.value < 1e-10;
    r.detail = "20 cases, max rel diff " + sci(worst.value) + " (" + worst.where + "), limit 1e-10";
  });
}

struct OracleCase {
  std::string label;
  std::function<double()> closed;
  std::function<OracleReport()> oracle;
};

std::vector<OracleCase> oracle_catalog() {
  std::vector<OracleCase> cases;
  auto origin = [&](const EntireFunction& f, double a, double rho) {
    cases.push_back({f.name() + " origin a=" + (std::isinf(a) ? std::string("inf") : std::to_string(a)) +
                         " rho=" + std::to_string(rho),
                     [=] { return fp_origin_noninteger(f, a, rho).value; },
                     [=] { return fp_epsilon_oracle_origin(f, a, rho, default_origin_ladder(rho, a)); }});
  };
  auto endpoint = [&](const EntireFunction& g, double c, int n, double alpha) {
    cases.push_back({g.name() + " endpoint c=" + std::to_string(c) + " rho=" + std::to_string(n + alpha),
                     [=] { return fp_endpoint(g, c, n + alpha).value; },
                     [=] { return fp_epsilon_oracle(g, c, n, alpha, default_endpoint_ladder(c)); }});
  };
  origin(exp_neg(), kInfinity, 1.5);
  origin(exp_neg(), kInfinity, 2.25);
  origin(exp_neg(), kInfinity, 3.75);
  origin(exponential(-2.0), kInfinity, 1.3);
  origin(power_exp(2), kInfinity, 2.5);
  origin(power_exp(3), kInfinity, 3.25);
  origin(gauss_exp(1.0, 0.5), kInfinity, 1.5);
  origin(gauss_exp(1.0, 2.0), kInfinity, 2.75);
  origin(exp_neg(), 1.0, 1.5);
  origin(beta_poly(2, 4), 1.0, 3.5);
  origin(monomial(5), 1.0, 2.5);
  endpoint(from_coefficients({{0, 1.0}}, "one"), 1.0, 1, 0.5);
  endpoint(exp_neg(), 1.0, 1, 0.25);
  endpoint(exp_neg(), 1.0, 2, 0.5);
  endpoint(exp_neg(), 1.0, 3, 0.75);
  endpoint(gauss_exp(1.0, 2.0), 0.5, 2, 0.5);
  endpoint(power_exp(2), 0.8, 2, 0.3);
  // Singular term -⨍_0^ω f(x-ω)/x^λ through the origin oracle.
  {
    const auto f = power_exp(2);
    const double w = 0.25;
    cases.push_back({"singular term power_exp[2] omega=0.25 n=2 alpha=0.5",
                     [=] { return -fp_singular_term(f, w, 2, 0.5).value; },
                     [=] {
                       const auto shifted = translate(f, -w);
                       return fp_epsilon_oracle_origin(shifted, w, 2.5, default_origin_ladder(2.5, w));
                     }});
  }
  return cases;
}

CheckResult criterion3() {
  return guarded("C3", "Closed-form finite parts vs epsilon-limit oracle", [](CheckResult& r) {
    const auto cases = oracle_catalog();
    Worst worst;
    int failures = 0;
    for (const auto& c : cases) {
      const double closed = c.closed();
      const auto o = c.oracle();
      const double err = std::fabs(closed - o.value) / std::max(1.0, std::fabs(closed));
      if (!(err < 1e-6)) ++failures;
      worst.update(err, c.label);
    }
    r.passed = failures == 0 && cases.size() >= 10;
    r.detail = std::to_string(cases.size()) + " cases, " + std::to_string(failures) +
               " over 1e-6; worst " + sci(worst.value) + " (" + worst.where + ")";
  });
}

CheckResult criterion4() {
  return guarded("C4", "2F1 expansion vs Prudnikov special case", [](CheckResult& r) {
    Worst worst;
    for (double z : {1.5, 2.0, 5.0, 10.0}) {
      const double e = apps::gauss2f1_expansion({3, 0.5, 2, 3, z}).value;
      worst.update(rel_err(e, apps::prudnikov_special_case(z)), "zeta=" + std::to_string(z));
    }
    r.passed = worst.value < 1e-10;
    r.detail = "max rel err " + sci(worst.value) + " at " + worst.where + ", limit 1e-10";
  });
}

CheckResult criterion5() {
  return guarded("C5", "Cross-assembly agreement (2F1 forms, Kummer U forms)", [](CheckResult& r) {
    std::mt19937 rng(777);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    Worst gauss;
    Worst kummer;
    for (int i = 0; i < 50; ++i) {
      apps::Gauss2F1Params p;
      p.n = 1 + static_cast<int>(3 * unit(rng));
      p.alpha = 0.05 + 0.9 * unit(rng);
      p.r = 1 + static_cast<int>(4 * unit(rng));
      p.s = p.r + 1 + static_cast<int>(4 * unit(rng));
      p.zeta = 1.2 + 20.0 * unit(rng);
      gauss.update(rel_err(apps::gauss2f1_expansion(p).value,
                           apps::gauss2f1_two_hypergeometric(p).value),
                   "n=" + std::to_string(p.n) + " r=" + std::to_string(p.r) +
                       " s=" + std::to_string(p.s) + " zeta=" + std::to_string(p.zeta));
    }
    for (int i = 0; i < 50; ++i) {
      apps::KummerParams p;
      p.n = 1 + static_cast<int>(4 * unit(rng));
      p.alpha = 0.05 + 0.9 * unit(rng);
      p.omega = 0.01 + 2.0 * unit(rng);
      kummer.update(rel_err(apps::kummer_u(p).value, apps::kummer_u_two_hypergeometric(p).value),
                    "n=" + std::to_string(p.n) + " alpha=" + std::to_string(p.alpha) +
                        " omega=" + std::to_string(p.omega));
    }
    r.passed = gauss.value < 1e-10 && kummer.value < 1e-10;
    r.detail = "2F1 max rel diff " + sci(gauss.value) + ", U max rel diff " + sci(kummer.value) +
               " (limit 1e-10)";
  });
}

CheckResult criterion6() {
  return guarded("C6", "Kummer U expansion vs integral representation; erfc variant",
                 [](CheckResult& r) {
    Worst worst;
    for (int n = 1; n <= 3; ++n) {
      for (double a : {0.25, 0.5, 0.75}) {
        for (double w : {0.05, 0.2, 0.5}) {
          const apps::KummerParams p{n, a, w};
          worst.update(rel_err(apps::kummer_u(p).value, reference::kummer_u_quadrature(p).value),
                       "n=" + std::to_string(n) + " alpha=" + std::to_string(a) +
                           " omega=" + std::to_string(w));
        }
      }
    }
    double sqrt_variant = 0.0;
    double literal_variant = 0.0;
    for (double w : {0.05, 0.2, 0.3, 0.5}) {
      const double q = reference::kummer_u_quadrature({2, 0.5, w}).value;
      sqrt_variant = std::max(sqrt_variant, rel_err(apps::kummer_u2_half_closed_form(w, std::sqrt(w)), q));
      literal_variant = std::max(literal_variant, rel_err(apps::kummer_u2_half_closed_form(w, w), q));
    }
    const bool resolved = sqrt_variant < 1e-10 && literal_variant > 1e-3;
    r.passed = worst.value < 1e-8 && resolved;
    r.detail = "27 cases, max rel err " + sci(worst.value) + " (" + worst.where +
               "); U(2,1/2,w): erfc(sqrt(w)) rel err " + sci(sqrt_variant) + ", erfc(w) rel err " +
               sci(literal_variant) + " -> erfc(sqrt(w)) matches";
  });
}

CheckResult criterion7() {
  return guarded("C7", "Small-omega dominance (f=1 ratio; U minus leading terms)", [](CheckResult& r) {
    const auto one = from_coefficients({{0, 1.0}}, "one");
    const double a = 1.0;
    double dev[2];
    int i = 0;
    for (double w : {1e-3 * a, 1e-4 * a}) {
      const StieltjesQuery q{w, a, 1, 0.5};
      const auto d = dominant_term(one, q);
      dev[i++] = std::fabs(eval_stieltjes(one, q).total / d.predict(w) - 1.0);
    }
    const bool ratio_ok = dev[0] < 5e-3 && dev[1] < dev[0];

    double worst_slope_gap = 0.0;
    std::string worst_where;
    double corrected_min = 1e300;
    double corrected_max = -1e300;
    for (int n = 1; n <= 3; ++n) {
      for (double alpha : {0.25, 0.5, 0.75}) {
        std::vector<double> ws{1e-4, 1e-3};
        std::vector<double> printed;
        std::vector<double> corrected;
        for (double w : ws) {
          const apps::KummerParams p{n, alpha, w};
          const double u = apps::kummer_u(p).value;
          printed.push_back(u - apps::kummer_u_leading_printed(p));
          corrected.push_back(u - apps::kummer_u_leading(p));
        }
        const double gap = std::fabs(loglog_slope(ws, printed) - alpha);
        if (gap > worst_slope_gap) {
          worst_slope_gap = gap;
          worst_where = "n=" + std::to_string(n) + " alpha=" + std::to_string(alpha);
        }
        const double cs = loglog_slope(ws, corrected);
        corrected_min = std::min(corrected_min, cs);
        corrected_max = std::max(corrected_max, cs);
      }
    }
    const bool slope_ok = worst_slope_gap < 0.1;
    r.passed = ratio_ok && slope_ok;
    r.detail = "f=1, a=1: |ratio-1| = " + sci(dev[0]) + " at w=1e-3a, " + sci(dev[1]) +
               " at w=1e-4a (limit 5e-3, exact value sqrt(w/(w+a))); U - printed leading pair: "
               "worst |slope-alpha| " + sci(worst_slope_gap) + " (" + worst_where +
               ", limit 0.1); with Gamma(-alpha) leading term the residual slope is in [" +
               sci(corrected_min) + ", " + sci(corrected_max) + "]";
  });
}

CheckResult criterion8() {
  return guarded("C8", "sqrt-kernel expansion of e^{-x^2} vs (1/2)e^{w^2/2}K0(w^2/2)",
                 [](CheckResult& r) {
    Worst worst;
    const auto f = gauss_exp(1.0, 0.0);
    for (double w : {0.05, 0.1, 0.3}) {
      const double x = 0.5 * w * w;
      const double ref = 0.5 * std::exp(x) * reference::bessel_k0_classical(x);
      worst.update(rel_err(eval_sqrt_transform(f, w, kInfinity).total, ref), "omega=" + std::to_string(w));
    }
    r.passed = worst.value < 1e-9;
    r.detail = "max rel err " + sci(worst.value) + " at " + worst.where + ", limit 1e-9";
  });
}

CheckResult criterion9() {
  return guarded("C9", "K0 psi-series vs classical series; small-x residual", [](CheckResult& r) {
    Worst worst;
    for (double x : {0.01, 0.1, 0.5, 1.0}) {
      worst.update(rel_err(apps::bessel_k0(x).value, reference::bessel_k0_classical(x)),
                   "x=" + std::to_string(x));
    }
    const double x = 1e-4;
    const double residual = std::fabs(apps::bessel_k0(x).value + std::log(0.5 * x) + specfun::euler_gamma);
    r.passed = worst.value < 1e-9 && residual < 1e-7;
    r.detail = "max rel err " + sci(worst.value) + " at " + worst.where +
               " (limit 1e-9); |K0(1e-4)+ln(x/2)+gamma| = " + sci(residual) + " (limit 1e-7)";
  });
}

CheckResult criterion10() {
  return guarded("C10", "Gaussian sqrt transform vs quadrature; residual after leading terms",
                 [](CheckResult& r) {
    Worst worst;
    for (double w : {0.02, 0.05, 0.1}) {
      worst.update(rel_err(apps::gaussian_sqrt(1.0, 2.0, w).value,
                           reference::gaussian_sqrt_quadrature(1.0, 2.0, w).value),
                   "omega=" + std::to_string(w));
    }
    std::vector<double> ws;
    std::vector<double> residual;
    for (int i = 0; i <= 8; ++i) {
      const double w = 0.01 * std::pow(10.0, i / 8.0);
      ws.push_back(w);
      residual.push_back(apps::gaussian_sqrt(1.0, 2.0, w).value - apps::gaussian_sqrt_leading(1.0, 2.0, w));
    }
    const double slope = loglog_slope(ws, residual);
    std::string signs;
    for (double v : residual) signs += v < 0 ? '-' : '+';
    r.passed = worst.value < 1e-8 && slope >= 1.8 && slope <= 2.2;
    r.detail = "max rel err " + sci(worst.value) + " at " + worst.where +
               " (limit 1e-8); residual log-log slope over [0.01,0.1] = " + sci(slope) +
               " (band [1.8,2.2]); residual signs " + signs;
  });
}

CheckResult criterion11() {
  return guarded("C11", "b_j, m_j and Kummer inner-sum identities", [](CheckResult& r) {
    Worst worst;
    for (int n = 1; n <= 3; ++n) {
      for (double alpha : {0.25, 0.5, 0.75}) {
        const double lambda = n + alpha;
        for (int j = 0; j <= 20; ++j) {
          for (int rr = 1; rr <= 3; ++rr) {
            for (int s = rr + 1; s <= rr + 4; ++s) {
              worst.update(rel_err(apps::b_coefficient_sum(rr, s, lambda, j),
                                   apps::b_coefficient(rr, s, lambda, j)),
                           "b_j j=" + std::to_string(j));
            }
          }
          worst.update(rel_err(apps::m_coefficient_sum(lambda, j), apps::m_coefficient(lambda, j)),
                       "m_j j=" + std::to_string(j));
          worst.update(rel_err(apps::kummer_inner_sum(n, alpha, j), apps::kummer_inner(n, alpha, j)),
                       "inner-sum r=" + std::to_string(j));
        }
      }
    }
    r.passed = worst.value < 1e-11;
    r.detail = "max rel diff " + sci(worst.value) + " (" + worst.where + "), limit 1e-11";
  });
}

CheckResult criterion12() {
  return guarded("C12", "Divergence detection at omega = 1.2a", [](CheckResult& r) {
    bool library_raised = false;
    std::string message;
    try {
      (void)eval_stieltjes(exp_neg(), {1.2, 1.0, 1, 0.5});
    } catch (const ConvergenceError& e) {
      library_raised = true;
      message = e.what();
    }
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run({"stieltjes", "--f", "exp_neg", "--a", "1", "--n", "1", "--alpha",
                               "0.5", "--omega", "1.2"},
                              out, err);
    r.passed = library_raised && code == 3;
    std::string line = err.str();
    if (!line.empty() && line.back() == '\n') line.pop_back();
    r.detail = std::string("library ") + (library_raised ? "raised non-convergence" : "returned a value") +
               "; CLI exit " + std::to_string(code) + " (" + line + ")";
  });
}

// --- invariants ------------------------------------------------------------

CheckResult invariant(const std::string& name, const std::function<double()>& measure, double limit) {
  return guarded("I", name, [&](CheckResult& r) {
    const double value = measure();
    r.passed = value < limit;
    r.detail = "measured " + sci(value) + ", limit " + sci(limit);
  });
}

}  // namespace

CheckResult run_criterion(int id) {
  static const Check checks[] = {criterion1, criterion2, criterion3,  criterion4,
                                 criterion5, criterion6, criterion7,  criterion8,
                                 criterion9, criterion10, criterion11, criterion12};
  if (id < 1 || id > kCriterionCount) throw DomainError("criterion id must be in 1..12");
  return checks[id - 1]();
}

std::vector<CheckResult> run_acceptance() {
  std::vector<CheckResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id));
  return out;
}

std::vector<CheckResult> run_invariants() {
  std::vector<CheckResult> out;
  std::mt19937 rng(4242);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  out.push_back(invariant("gamma recurrence", [&] {
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const double x = 0.1 + 29.9 * unit(rng);
      worst = std::max(worst, rel_err(x * specfun::gamma(x), specfun::gamma(x + 1.0)));
    }
    return worst;
  }, 1e-12));
  out.push_back(invariant("gamma reflection", [&] {
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
      double x = 0.001 + 0.998 * unit(rng);
      if (std::fabs(x - 0.5) < 1e-3) x += 0.01;
      worst = std::max(worst, std::fabs(specfun::gamma(x) * specfun::gamma(1 - x) * std::sin(kPi * x) / kPi - 1));
    }
    return worst;
  }, 1e-11));
  out.push_back(invariant("digamma recurrence", [&] {
    double worst = 0.0;
    for (int i = 0; i < 500; ++i) {
      const double x = 0.05 + 40.0 * unit(rng);
      worst = std::max(worst, std::fabs(specfun::digamma(x + 1) - specfun::digamma(x) - 1 / x));
    }
    return worst;
  }, 1e-12));
  out.push_back(invariant("binomial Pascal rule", [&] {
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
      const double mu = -6.0 + 12.0 * unit(rng);
      const int j = 1 + static_cast<int>(15 * unit(rng));
      worst = std::max(worst, rel_err(specfun::binom_real(mu - 1, j) + specfun::binom_real(mu - 1, j - 1),
                                      specfun::binom_real(mu, j)));
    }
    return worst;
  }, 1e-12));
  out.push_back(invariant("shift composition", [&] {
    double worst = 0.0;
    for (const auto& f : {exp_neg(), gauss_exp(1.0, 2.0), beta_poly(2, 5)}) {
      const double u = 0.3;
      const double v = -0.7;
      const auto twice = shift(translate(f, u), v, 12);
      const auto once = shift(f, u + v, 12);
      for (int k = 0; k <= 12; ++k) {
        worst = std::max(worst, std::fabs(twice.coeffs[k] - once.coeffs[k]) /
                                    std::max(1.0, std::fabs(once.coeffs[k])));
      }
    }
    return worst;
  }, 1e-10));
  out.push_back(invariant("A_j/B_j closed sums vs Taylor coefficients", [&] {
    const auto f = gauss_exp(1.0, 2.0);
    double worst = 0.0;
    for (int j = 0; j <= 10; ++j) {
      worst = std::max(worst, rel_err(apps::gaussian_a_scaled(1.0, 2.0, j), f.coeff(2 * j + 1)));
      worst = std::max(worst, rel_err(apps::gaussian_b_scaled(1.0, 2.0, j), f.coeff(2 * j)));
    }
    return worst;
  }, 1e-12));
  out.push_back(invariant("quadrature closed form (w+x)^{-3/2}", [&] {
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
      const double w = 0.01 + unit(rng);
      const double a = 0.1 + 5.0 * unit(rng);
      const auto q = quad::integrate([&](double x) { return std::pow(w + x, -1.5); }, 0.0, a, 1e-14);
      worst = std::max(worst, rel_err(q.value, 2.0 * (1 / std::sqrt(w) - 1 / std::sqrt(w + a))));
    }
    return worst;
  }, 1e-12));
  out.push_back(invariant("e^{-x} finite-part catalog vs epsilon oracle (j<=6)", [&] {
    double worst = 0.0;
    for (int j = 0; j <= 6; ++j) {
      for (double alpha : {0.25, 0.5, 0.75}) {
        const double rho = j + alpha + 1;
        const double closed = std::pow(-1.0, j + 1) * kPi / (std::sin(kPi * alpha) * std::tgamma(rho));
        worst = std::max(worst, rel_err(fp_origin_noninteger(exp_neg(), kInfinity, rho).value, closed));
        const auto o = fp_epsilon_oracle_origin(exp_neg(), kInfinity, rho, default_origin_ladder(rho));
        worst = std::max(worst, std::fabs(o.value - closed) / std::max(1.0, std::fabs(closed)));
      }
    }
    return worst;
  }, 1e-6));
  out.push_back(invariant("regular integrand: finite part equals quadrature", [&] {
    double worst = 0.0;
    for (int m : {3, 5, 8}) {
      const double rho = 1.5;
      const auto q = quad::integrate([&](double x) { return std::pow(x, m - rho); }, 0.0, 1.0, 1e-14);
      worst = std::max(worst, rel_err(fp_origin_noninteger(monomial(m), 1.0, rho).value, q.value));
    }
    const auto f = power_exp(4);
    // x = t^2 removes the square-root branch at the origin
    const auto q = quad::integrate_semi_infinite(
        [&](double t) { return 2.0 * t * f.eval(t * t) * std::pow(t, -5.0); }, 0.0, 1e-13);
    worst = std::max(worst, rel_err(fp_origin_noninteger(f, kInfinity, 2.5).value, q.value));
    return worst;
  }, 1e-9));
  out.push_back(invariant("Stieltjes expansion vs quadrature, random omega", [&] {
    double worst = 0.0;
    const std::vector<std::pair<EntireFunction, double>> cases = {
        {exp_neg(), kInfinity}, {power_exp(3), kInfinity}, {gauss_exp(1.0, 0.5), kInfinity},
        {exp_neg(), 1.0},       {beta_poly(2, 4), 1.0},    {gauss_exp(0.5, 1.0), 2.0}};
    for (const auto& [f, a] : cases) {
      for (int i = 0; i < 3; ++i) {
        const double scale = std::isinf(a) ? 1.0 : a;
        const double w = scale * (0.01 + 0.49 * unit(rng));
        const int n = 1 + static_cast<int>(3 * unit(rng));
        const double alpha = 0.1 + 0.8 * unit(rng);
        const auto e = eval_stieltjes(f, {w, a, n, alpha});
        const auto q = reference::stieltjes_quadrature(f, w, a, n + alpha);
        // error measured in units of max(1e-8, 10 * relative tail estimate)
        const double allowed = std::max(1e-8, 10.0 * e.tail_estimate / std::fabs(e.total));
        worst = std::max(worst, rel_err(e.total, q.value) / allowed);
      }
    }
    return worst;
  }, 1.0));
  out.push_back(invariant("singular term: shifted series vs reflected endpoint route", [&] {
    double worst = 0.0;
    for (const auto& f : {exp_neg(), power_exp(2), gauss_exp(1.0, 2.0), beta_poly(2, 4)}) {
      for (double w : {0.1, 0.4}) {
        for (int n : {1, 2}) {
          const double alpha = 0.35;
          const double direct = fp_singular_term(f, w, n, alpha).value;
          const double via_endpoint = -fp_endpoint(reflect(f), w, n + alpha).value;
          worst = std::max(worst, rel_err(direct, via_endpoint));
        }
      }
    }
    return worst;
  }, 1e-10));
  out.push_back(invariant("dominance ratio improves as omega shrinks (x e^{-x}, n=2)", [&] {
    const auto f = power_exp(2);
    const StieltjesQuery near{1e-2, kInfinity, 2, 0.5};
    const StieltjesQuery far{1e-4, kInfinity, 2, 0.5};
    const auto d = dominant_term(f, near);
    const double dev_near = std::fabs(eval_stieltjes(f, near).total / d.predict(near.omega) - 1);
    const double dev_far = std::fabs(eval_stieltjes(f, far).total / d.predict(far.omega) - 1);
    return dev_far < dev_near ? 0.0 : 1.0;
  }, 0.5));
  out.push_back(invariant("2F1 expansion vs Euler integral (includes r = 1)", [&] {
    double worst = 0.0;
    for (int r = 1; r <= 3; ++r) {
      for (double z : {1.3, 4.0}) {
        const apps::Gauss2F1Params p{2, 0.4, r, r + 2, z};
        worst = std::max(worst, rel_err(apps::gauss2f1_expansion(p).value,
                                        reference::gauss2f1_quadrature(p).value));
      }
    }
    return worst;
  }, 1e-9));
  for (std::size_t k = 0; k < out.size(); ++k) out[k].id = "I" + std::to_string(k + 1);
  return out;
}

std::vector<CheckResult> run_all() {
  auto out = run_acceptance();
  auto inv = run_invariants();
  out.insert(out.end(), inv.begin(), inv.end());
  return out;
}

}  // namespace fpst::verify
