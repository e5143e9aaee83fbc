#include "fpst/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <string>
#include <vector>

#include "fpst/series.hpp"

namespace fpst::quad {

namespace {

// 21-point Kronrod extension of the 10-point Gauss rule (QUADPACK dqk21).
constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0};
constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077958109831074, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Segment {
  double lo;
  double hi;
  double value;
  double error;
  double floor;  // round-off limited error level
};

struct ByError {
  bool operator()(const Segment& a, const Segment& b) const { return a.error < b.error; }
};

double sample(const Integrand& f, double x) {
  const double y = f(x);
  if (!std::isfinite(y)) {
    throw QuadratureError("integrand is not finite at x = " + std::to_string(x));
  }
  return y;
}

Segment gauss_kronrod(const Integrand& f, double lo, double hi) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const double fc = sample(f, center);
  double kronrod = fc * kWgk[10];
  double gauss = 0.0;
  double resabs = std::fabs(kronrod);
  std::array<double, 10> f1{};
  std::array<double, 10> f2{};
  for (int j = 0; j < 10; ++j) {
    const double dx = half * kXgk[j];
    f1[j] = sample(f, center - dx);
    f2[j] = sample(f, center + dx);
    const double pair = f1[j] + f2[j];
    kronrod += kWgk[j] * pair;
    resabs += kWgk[j] * (std::fabs(f1[j]) + std::fabs(f2[j]));
    if (j % 2 == 1) gauss += kWg[j / 2] * pair;
  }
  const double mean = 0.5 * kronrod;
  double resasc = kWgk[10] * std::fabs(fc - mean);
  for (int j = 0; j < 10; ++j) {
    resasc += kWgk[j] * (std::fabs(f1[j] - mean) + std::fabs(f2[j] - mean));
  }
  const double value = kronrod * half;
  resabs *= std::fabs(half);
  resasc *= std::fabs(half);
  double error = std::fabs((kronrod - gauss) * half);
  if (resasc != 0.0 && error != 0.0) {
    error = resasc * std::min(1.0, std::pow(200.0 * error / resasc, 1.5));
  }
  const double floor = 50.0 * kEps * resabs;
  error = std::max(error, floor);
  return {lo, hi, value, error, floor};
}

bool splittable(const Segment& s) {
  const double scale = std::max({std::fabs(s.lo), std::fabs(s.hi), 1e-300});
  return s.error > s.floor * 1.0001 && (s.hi - s.lo) > 1e3 * kEps * scale;
}

QuadResult adaptive(const Integrand& f, double lo, double hi, const QuadOptions& options) {
  long evaluations = 0;
  auto counted = [&](double x) {
    ++evaluations;
    return f(x);
  };
  std::priority_queue<Segment, std::vector<Segment>, ByError> active;
  double settled_value = 0.0;
  double settled_error = 0.0;
  double total = 0.0;
  double error = 0.0;

  auto push = [&](const Segment& s) {
    total += s.value;
    error += s.error;
    if (splittable(s)) {
      active.push(s);
    } else {
      settled_value += s.value;
      settled_error += s.error;
    }
  };

  push(gauss_kronrod(counted, lo, hi));
  for (int subdivisions = 1;; ++subdivisions) {
    const double target = std::max(options.abs_tol, options.rel_tol * std::fabs(total));
    if (error <= target || active.empty()) break;
    if (subdivisions >= options.max_subdivisions) {
      throw QuadratureError("adaptive quadrature exceeded " +
                            std::to_string(options.max_subdivisions) +
                            " subdivisions (error estimate " + std::to_string(error) + ")");
    }
    const Segment worst = active.top();
    active.pop();
    total -= worst.value;
    error -= worst.error;
    const double mid = 0.5 * (worst.lo + worst.hi);
    push(gauss_kronrod(counted, worst.lo, mid));
    push(gauss_kronrod(counted, mid, worst.hi));
  }

  // Re-sum to shed the drift of the running totals.
  double value = settled_value;
  double err = settled_error;
  while (!active.empty()) {
    value += active.top().value;
    err += active.top().error;
    active.pop();
  }
  return {value, err, evaluations};
}

QuadResult with_endpoint_map(const Integrand& f, double lo, double hi, const QuadOptions& options) {
  QuadOptions plain = options;
  plain.lo_exponent = 0.0;
  plain.hi_exponent = 0.0;
  const double p_lo = options.lo_exponent;
  const double p_hi = options.hi_exponent;
  if ((p_lo != 0.0 && (p_lo <= 0.0 || p_lo >= 1.0)) ||
      (p_hi != 0.0 && (p_hi <= 0.0 || p_hi >= 1.0))) {
    throw DomainError("endpoint exponents must lie in (0, 1)");
  }
  if (p_lo != 0.0 && p_hi != 0.0) {
    const double mid = 0.5 * (lo + hi);
    QuadOptions left = options;
    left.hi_exponent = 0.0;
    QuadOptions right = options;
    right.lo_exponent = 0.0;
    const auto a = with_endpoint_map(f, lo, mid, left);
    const auto b = with_endpoint_map(f, mid, hi, right);
    return {a.value + b.value, a.abs_error_estimate + b.abs_error_estimate,
            a.evaluations + b.evaluations};
  }
  const double p = p_lo != 0.0 ? p_lo : p_hi;
  const double q = 1.0 / (1.0 - p);
  const double span = std::pow(hi - lo, 1.0 - p);
  // x = end ∓ u^q, dx = q u^{q-1} du
  if (p_hi != 0.0) {
    return adaptive([&](double u) { return f(hi - std::pow(u, q)) * q * std::pow(u, q - 1.0); },
                    0.0, span, plain);
  }
  return adaptive([&](double u) { return f(lo + std::pow(u, q)) * q * std::pow(u, q - 1.0); },
                  0.0, span, plain);
}

}  // namespace

QuadResult integrate(const Integrand& f, double lo, double hi, const QuadOptions& options) {
  if (!(lo < hi)) throw DomainError("integrate: need lo < hi");
  if (!std::isfinite(lo) || !std::isfinite(hi)) {
    throw DomainError("integrate: finite limits required (use integrate_semi_infinite)");
  }
  if (options.lo_exponent != 0.0 || options.hi_exponent != 0.0) {
    return with_endpoint_map(f, lo, hi, options);
  }
  return adaptive(f, lo, hi, options);
}

QuadResult integrate(const Integrand& f, double lo, double hi, double tol) {
  QuadOptions options;
  options.rel_tol = tol;
  return integrate(f, lo, hi, options);
}

QuadResult integrate_semi_infinite(const Integrand& f, double lo, const QuadOptions& options) {
  if (!std::isfinite(lo)) throw DomainError("integrate_semi_infinite: finite lower limit required");
  QuadOptions mapped = options;
  mapped.hi_exponent = 0.0;
  auto g = [&](double t) {
    const double s = 1.0 - t;
    const double x = lo + t / s;
    if (!std::isfinite(x)) return 0.0;
    return f(x) / (s * s);
  };
  try {
    return integrate(g, 0.0, 1.0, mapped);
  } catch (const QuadratureError& e) {
    throw QuadratureError(std::string("semi-infinite integral: tail does not settle (") + e.what() +
                          ")");
  }
}

QuadResult integrate_semi_infinite(const Integrand& f, double lo, double tol) {
  QuadOptions options;
  options.rel_tol = tol;
  return integrate_semi_infinite(f, lo, options);
}

}  // namespace fpst::quad
