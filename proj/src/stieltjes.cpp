#include "fpst/stieltjes.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fpst/specfun.hpp"

namespace fpst {

namespace {

void require_omega(double omega, double a) {
  if (!(omega > 0.0) || !std::isfinite(omega)) throw DomainError("omega must be a positive finite number");
  if (!(a > 0.0) || std::isnan(a)) throw DomainError("upper limit a must be positive (or inf)");
  if (omega == a) throw ConvergenceError("omega == a: the expansion converges only for omega < a");
}

// Term budget for a series converging like ratio^j.
int naive_cap(const SeriesControl& control, double ratio) {
  if (!(ratio > 0.0) || ratio >= 1.0) return control.term_cap;
  const double needed = std::log(control.rel_tol) / std::log(ratio);
  return std::min(control.term_cap, std::max(50, static_cast<int>(std::ceil(10.0 * needed))));
}

ExpansionResult assemble(SeriesSum& naive, const std::string& what, std::vector<double> partials,
                         const FinitePartValue& singular, double naive_tail_extra = 0.0) {
  naive.require_converged(what);
  ExpansionResult out;
  out.naive_partial_sums = std::move(partials);
  out.singular_term = singular.value;
  out.total = out.naive_sum() + singular.value;
  out.tail_estimate = naive.tail_estimate() + naive_tail_extra + singular.tail_estimate;
  out.terms_used = naive.terms();
  return out;
}

bool identically_zero(const EntireFunction& f) {
  const auto deg = f.degree();
  return deg && *deg < 0;
}

ExpansionResult zero_result() {
  ExpansionResult out;
  out.naive_partial_sums = {0.0};
  out.terms_used = 1;
  return out;
}

}  // namespace

void StieltjesQuery::validate() const {
  if (n < 1) throw DomainError("n must be a positive integer");
  if (!(alpha > 0.0 && alpha < 1.0) || is_integer_order(alpha)) {
    throw DomainError("alpha must lie strictly inside (0, 1)");
  }
  require_omega(omega, a);
}

ExpansionResult eval_stieltjes(const EntireFunction& f, const StieltjesQuery& q,
                               const SeriesControl& control) {
  q.validate();
  if (identically_zero(f)) return zero_result();
  const double lambda = q.lambda();
  const int cap = std::isinf(q.a) ? control.term_cap : naive_cap(control, q.omega / q.a);
  SeriesSum naive(control, cap);
  std::vector<double> partials;
  double tails = 0.0;
  double weight = 1.0;  // C(-λ, j) ω^j
  for (int j = 0; !naive.exhausted(); ++j) {
    const auto fp = fp_origin_noninteger(f, q.a, lambda + j, control);
    const double term = weight == 0.0 ? 0.0 : weight * fp.value;
    tails += std::fabs(weight) * fp.tail_estimate;
    const bool done = naive.add(term);
    partials.push_back(naive.value());
    if (done) break;
    weight *= (-lambda - j) / (j + 1) * q.omega;
  }
  const auto singular = fp_singular_term(f, q.omega, q.n, q.alpha, control);
  return assemble(naive, "Stieltjes naive series (omega=" + std::to_string(q.omega) + ")",
                  std::move(partials), singular, tails);
}

FinitePartValue sqrt_singular_term(const EntireFunction& f, double omega,
                                   const SeriesControl& control) {
  const double log_omega = std::log(omega);
  const double sqrt_pi = std::sqrt(std::numbers::pi);
  // Running ratios Γ(j+1/2)/j! and j!/Γ(j+3/2); ω^{2j} and ω^{2j+1}.
  double even_ratio = sqrt_pi;
  double odd_ratio = 2.0 / sqrt_pi;
  double w_even = 1.0;
  auto term_at = [&](int j) {
    const double sign = j % 2 == 0 ? 1.0 : -1.0;
    double term = 0.0;
    const double c_even = f.coeff(2 * j);
    if (c_even != 0.0) {
      const double h = specfun::harmonic(j - 0.5) - specfun::harmonic(j) + 2.0 * log_omega;
      term -= sign * c_even * even_ratio * w_even * h / (2.0 * sqrt_pi);
    }
    const double c_odd = f.coeff(2 * j + 1);
    if (c_odd != 0.0) term -= 0.5 * sqrt_pi * sign * c_odd * odd_ratio * w_even * omega;
    even_ratio *= (j + 0.5) / (j + 1.0);
    odd_ratio *= (j + 1.0) / (j + 1.5);
    w_even *= omega * omega;
    return term;
  };
  if (auto deg = f.degree()) {
    double acc = 0.0;
    int j = 0;
    for (; 2 * j <= *deg; ++j) acc += term_at(j);
    return {acc, j, 0.0};
  }
  auto sum = sum_series(control, "sqrt-kernel correction (omega=" + std::to_string(omega) + ")",
                        term_at);
  return {sum.value(), sum.terms(), sum.tail_estimate()};
}

ExpansionResult eval_sqrt_transform(const EntireFunction& f, double omega, double a,
                                    const SeriesControl& control) {
  require_omega(omega, a);
  if (identically_zero(f)) return zero_result();
  const int cap = std::isinf(a) ? control.term_cap : naive_cap(control, (omega / a) * (omega / a));
  SeriesSum naive(control, cap);
  std::vector<double> partials;
  double tails = 0.0;
  double weight = 1.0;  // C(-1/2, k) ω^{2k}
  for (int k = 0; !naive.exhausted(); ++k) {
    const auto fp = fp_origin_integer(f, a, 2 * k + 1, control);
    const double term = weight * fp.value;
    tails += std::fabs(weight) * fp.tail_estimate;
    const bool done = naive.add(term);
    partials.push_back(naive.value());
    if (done) break;
    weight *= (-0.5 - k) / (k + 1) * omega * omega;
  }
  const auto singular = sqrt_singular_term(f, omega, control);
  return assemble(naive, "sqrt-kernel naive series (omega=" + std::to_string(omega) + ")",
                  std::move(partials), singular, tails);
}

int zero_order(const EntireFunction& f, int window) {
  const int limit = f.degree() ? std::min(*f.degree() + 1, window) : window;
  double scale = 0.0;
  for (int k = 0; k < limit; ++k) scale = std::max(scale, std::fabs(f.coeff(k)));
  if (scale == 0.0) throw DomainError("zero function has no zero order");
  for (int k = 0; k < limit; ++k) {
    if (std::fabs(f.coeff(k)) >= 1e-14 * scale) return k;
  }
  throw DomainError("zero order not found");  // unreachable
}

std::string to_string(DominantSource source) {
  return source == DominantSource::singular ? "singular" : "naive";
}

double DominantTerm::predict(double omega) const {
  return power == 0.0 ? coefficient : coefficient * std::pow(omega, power);
}

DominantTerm dominant_term(const EntireFunction& f, const StieltjesQuery& q,
                           const SeriesControl& control) {
  q.validate();
  const int m = zero_order(f);
  const double lambda = q.lambda();
  DominantTerm out;
  out.zero_order = m;
  if (m < q.n) {
    // m! Σ_{j<=m} (-1)^{m-j} / (j!(m-j)!(λ-j-1)), i.e. Σ_j (-1)^{m-j} C(m,j)/(λ-j-1).
    double acc = 0.0;
    double binom = 1.0;
    for (int j = 0; j <= m; ++j) {
      acc += ((m - j) % 2 == 0 ? 1.0 : -1.0) * binom / (lambda - j - 1.0);
      binom = binom * (m - j) / (j + 1);
    }
    out.coefficient = f.coeff(m) * acc;
    out.power = m + 1.0 - lambda;
    out.source = DominantSource::singular;
  } else {
    out.coefficient = fp_origin_noninteger(f, q.a, lambda, control).value;
    out.power = 0.0;
    out.source = DominantSource::naive;
  }
  return out;
}

}  // namespace fpst
