#include "fpst/fpi.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fpst/quadrature.hpp"
#include "fpst/specfun.hpp"

namespace fpst {

namespace {

void require_noninteger(double rho, const char* fn) {
  if (!std::isfinite(rho) || is_integer_order(rho)) {
    throw DomainError(std::string(fn) + ": order must be a finite non-integer");
  }
}

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || std::isnan(v)) throw DomainError(std::string(what) + " must be positive");
}

FinitePartValue from_sum(const SeriesSum& sum) {
  return {sum.value(), sum.terms(), sum.tail_estimate()};
}

/// Sums term(k) over k = 0..degree for polynomials, otherwise under the
/// stopping rule.
template <typename TermFn>
FinitePartValue coefficient_sum(const EntireFunction& f, const SeriesControl& control,
                                const std::string& what, TermFn&& term) {
  if (auto deg = f.degree()) {
    double acc = 0.0;
    for (int k = 0; k <= *deg; ++k) acc += term(k);
    return {acc, std::max(*deg + 1, 0), 0.0};
  }
  return from_sum(sum_series(control, what, term));
}

// ⨍_0^∞ e^{-b x²}/x^p dx for integer p >= 1 (closed forms for odd and even p).
double gaussian_power_fp(double b, int p) {
  if (p % 2 == 1) {
    const int j = (p + 1) / 2;
    const double sign = j % 2 == 0 ? 1.0 : -1.0;
    return sign * std::pow(b, j - 1) * (std::log(b) - specfun::digamma(j)) /
           (2.0 * std::tgamma(static_cast<double>(j)));
  }
  const int j = p / 2;
  const double sign = j % 2 == 0 ? 1.0 : -1.0;
  return sign * std::pow(b, j - 0.5) * std::numbers::pi / (2.0 * std::tgamma(j + 0.5));
}

// β^n/n! · Γ(s)/(2 α^s) through logarithms, s = (n + 1 - ρ)/2.
double gaussian_moment_term(double alpha, double beta, int n, double rho) {
  if (n > 0 && beta == 0.0) return 0.0;
  const double s = 0.5 * (n + 1 - rho);
  const auto lg = specfun::lgamma_signed(s);
  double log_mag = lg.log_abs - std::lgamma(n + 1.0) - s * std::log(alpha) - std::log(2.0);
  if (n > 0) log_mag += n * std::log(std::fabs(beta));
  const double sign = lg.sign * ((beta < 0.0 && n % 2 == 1) ? -1.0 : 1.0);
  return sign * std::exp(log_mag);
}

FinitePartValue origin_infinite_catalog(const EntireFunction& f, double rho,
                                        const SeriesControl& control) {
  const auto& p = f.params();
  switch (f.family()) {
    case Family::exponential:
      if (p.beta < 0.0) {
        return {specfun::gamma(1.0 - rho) * std::pow(-p.beta, rho - 1.0), 1, 0.0};
      }
      break;
    case Family::power_exp:
      return {specfun::gamma(p.n - rho), 1, 0.0};
    case Family::gauss_exp:
      if (p.alpha > 0.0) {
        return from_sum(sum_series(control, "gaussian finite part", [&](int n) {
          return gaussian_moment_term(p.alpha, p.beta, n, rho);
        }));
      }
      break;
    default:
      break;
  }
  throw MissingClosedFormError("no a = infinity closed form registered for " + f.name());
}

double richardson(std::span<const double> eps, std::span<const double> values,
                  std::span<const double> exponents) {
  const auto rows = static_cast<Eigen::Index>(exponents.size() + 1);
  const double scale = eps.front();
  Eigen::MatrixXd A(rows, rows);
  Eigen::VectorXd b(rows);
  for (Eigen::Index i = 0; i < rows; ++i) {
    A(i, 0) = 1.0;
    const double t = eps[i] / scale;
    for (Eigen::Index k = 1; k < rows; ++k) A(i, k) = std::pow(t, exponents[k - 1]);
    b(i) = values[i];
  }
  return A.colPivHouseholderQr().solve(b)(0);
}

/// Extrapolates (eps_i, value_i) to ε → 0 on the model c + Σ_k r_k ε^{p_k}.
OracleReport extrapolate(const std::vector<double>& eps, const std::vector<double>& values,
                         const std::vector<double>& exponents, long evaluations,
                         std::string method) {
  const int order = static_cast<int>(exponents.size());
  // Estimates of increasing order, each from the smallest order+1 rungs.
  std::vector<double> estimates;
  for (int k = 1; k <= order; ++k) {
    const auto first = eps.size() - (k + 1);
    estimates.push_back(richardson(std::span(eps).subspan(first), std::span(values).subspan(first),
                                   std::span(exponents).first(k)));
  }
  const double best = estimates.back();
  double error = order >= 2 ? std::fabs(estimates[order - 1] - estimates[order - 2])
                            : std::fabs(best - values.back());
  if (order >= 3) {
    const double previous = std::fabs(estimates[order - 2] - estimates[order - 3]);
    if (error > previous && error > 1e-6 * std::max(1.0, std::fabs(best))) {
      throw ConvergenceError("epsilon extrapolation does not contract (last differences " +
                             std::to_string(previous) + ", " + std::to_string(error) + ")");
    }
  }
  return {best, error, evaluations, std::move(method)};
}

quad::QuadOptions oracle_quadrature() {
  quad::QuadOptions options;
  options.rel_tol = 1e-14;
  options.max_subdivisions = 20000;
  return options;
}

}  // namespace

bool is_integer_order(double rho) noexcept {
  return std::fabs(rho - std::round(rho)) < 1e-12;
}

EpsilonLadder EpsilonLadder::geometric(double first, double ratio, int rungs, int order) {
  EpsilonLadder ladder;
  ladder.extrapolation_order = order;
  double eps = first;
  for (int i = 0; i < rungs; ++i) {
    ladder.eps_values.push_back(eps);
    eps *= ratio;
  }
  ladder.validate();
  return ladder;
}

void EpsilonLadder::validate() const {
  if (eps_values.size() < 4) throw DomainError("epsilon ladder needs at least 4 rungs");
  if (extrapolation_order < 1 || extrapolation_order + 1 > static_cast<int>(eps_values.size())) {
    throw DomainError("epsilon ladder: extrapolation order must be in [1, rungs - 1]");
  }
  for (std::size_t i = 0; i < eps_values.size(); ++i) {
    if (!(eps_values[i] > 0.0) || (i > 0 && !(eps_values[i] < eps_values[i - 1]))) {
      throw DomainError("epsilon ladder must be positive and strictly decreasing");
    }
  }
}

FinitePartValue fp_origin_noninteger(const EntireFunction& f, double a, double rho,
                                     const SeriesControl& control) {
  require_noninteger(rho, "fp_origin_noninteger");
  require_positive(rho, "order rho");
  require_positive(a, "upper limit a");
  if (std::isinf(a)) return origin_infinite_catalog(f, rho, control);
  return coefficient_sum(f, control, "fp_origin_noninteger(" + f.name() + ")", [&](int k) {
    const double c = f.coeff(k);
    if (c == 0.0) return 0.0;
    const double p = k - rho + 1.0;
    return c * std::pow(a, p) / p;
  });
}

FinitePartValue fp_origin_integer(const EntireFunction& f, double a, int m,
                                  const SeriesControl& control) {
  if (m < 1) throw DomainError("fp_origin_integer: m must be >= 1");
  require_positive(a, "upper limit a");
  if (std::isinf(a)) return fp_origin_integer_infinite(f, m, control);
  const double log_a = std::log(a);
  return coefficient_sum(f, control, "fp_origin_integer(" + f.name() + ")", [&](int k) {
    const double c = f.coeff(k);
    if (c == 0.0) return 0.0;
    if (k == m - 1) return c * log_a;
    const int p = k - m + 1;
    return c * std::pow(a, p) / p;
  });
}

FinitePartValue fp_gaussian_split(double alpha, double beta, int m, const SeriesControl& control) {
  require_positive(alpha, "gaussian alpha");
  if (m < 1) throw DomainError("fp_gaussian_split: m must be >= 1");
  double singular = 0.0;
  double weight = 1.0;  // β^n/n!
  for (int n = 0; n < m; ++n) {
    singular += weight * gaussian_power_fp(alpha, m - n);
    weight *= beta / (n + 1);
  }
  if (beta == 0.0) return {singular, m, 0.0};
  auto tail = sum_series(control, "gaussian split tail", [&](int i) {
    return gaussian_moment_term(alpha, beta, m + i, static_cast<double>(m));
  });
  return {singular + tail.value(), m + tail.terms(), tail.tail_estimate()};
}

FinitePartValue fp_origin_integer_infinite(const EntireFunction& f, int m,
                                           const SeriesControl& control) {
  if (m < 1) throw DomainError("fp_origin_integer_infinite: m must be >= 1");
  if (f.family() != Family::gauss_exp || !(f.params().alpha > 0.0)) {
    throw MissingClosedFormError("integer-order a = infinity finite part only for e^{-ax^2+bx}, a > 0 (got " +
                                 f.name() + ")");
  }
  const double alpha = f.params().alpha;
  const double beta = f.params().beta;
  if (beta == 0.0) return {gaussian_power_fp(alpha, m), 1, 0.0};
  if (m % 2 == 0) return fp_gaussian_split(alpha, beta, m, control);

  // m = 2j + 1: logarithmic, odd-power and convergent groups.
  const int j = (m - 1) / 2;
  double logs = 0.0;
  for (int i = 0; i <= j; ++i) {
    const double sign = (j - i + 1) % 2 == 0 ? 1.0 : -1.0;
    logs += sign * std::pow(alpha, j - i) * std::pow(beta, 2 * i) /
            (2.0 * std::tgamma(2.0 * i + 1) * std::tgamma(j - i + 1.0)) *
            (std::log(alpha) - specfun::digamma(j - i + 1.0));
  }
  double odd = 0.0;
  for (int i = 0; i < j; ++i) {
    const double sign = (j - i) % 2 == 0 ? 1.0 : -1.0;
    odd += sign * std::pow(alpha, j - i - 0.5) * std::pow(beta, 2 * i + 1) /
           (std::tgamma(2.0 * i + 2) * std::tgamma(j - i + 0.5));
  }
  odd *= std::numbers::pi / 2.0;
  auto tail = sum_series(control, "gaussian finite part tail", [&](int i) {
    return gaussian_moment_term(alpha, beta, 2 * j + 1 + i, static_cast<double>(m));
  });
  return {logs + odd + tail.value(), 2 * j + 1 + tail.terms(), tail.tail_estimate()};
}

FinitePartValue fp_endpoint(const EntireFunction& g, double c, double rho,
                            const SeriesControl& control) {
  require_noninteger(rho, "fp_endpoint");
  require_positive(c, "endpoint c");
  if (std::isinf(c)) throw DomainError("fp_endpoint: c must be finite");
  return coefficient_sum(g, control, "fp_endpoint(" + g.name() + ")", [&](int j) {
    const double d = shifted_coefficient(g, c, j, control);
    if (d == 0.0) return 0.0;
    const double p = j + 1.0 - rho;
    return (j % 2 == 0 ? d : -d) * std::pow(c, p) / p;
  });
}

FinitePartValue fp_singular_term(const EntireFunction& f, double omega, int n, double alpha,
                                 const SeriesControl& control) {
  require_positive(omega, "omega");
  if (n < 1) throw DomainError("fp_singular_term: n must be >= 1");
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("fp_singular_term: alpha must lie in (0, 1)");
  const double lambda = n + alpha;
  auto result = coefficient_sum(f, control, "singular term(" + f.name() + ")", [&](int j) {
    const double d = shifted_coefficient(f, -omega, j, control);
    if (d == 0.0) return 0.0;
    const double p = j + 1.0 - lambda;
    return d * std::pow(omega, p) / p;
  });
  result.value = -result.value;
  return result;
}

OracleReport fp_epsilon_oracle(const PointEvaluator& g, std::span<const double> taylor_at_c,
                               double c, int n, double alpha, const EpsilonLadder& ladder) {
  ladder.validate();
  require_positive(c, "endpoint c");
  if (n < 0) throw DomainError("fp_epsilon_oracle: n must be >= 0");
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("fp_epsilon_oracle: alpha must lie in (0, 1)");
  if (static_cast<int>(taylor_at_c.size()) < n) {
    throw DomainError("fp_epsilon_oracle: need n Taylor coefficients at c");
  }
  if (ladder.eps_values.front() >= c) throw DomainError("fp_epsilon_oracle: epsilon must be < c");
  const double lambda = n + alpha;
  const auto options = oracle_quadrature();
  long evaluations = 0;
  std::vector<double> values;
  for (double eps : ladder.eps_values) {
    const auto q = quad::integrate([&](double x) { return g(x) * std::pow(c - x, -lambda); }, 0.0,
                                   c - eps, options);
    evaluations += q.evaluations;
    double bracket = q.value;
    for (int j = 0; j < n; ++j) {
      const double p = j + 1.0 - lambda;
      bracket += (j % 2 == 0 ? 1.0 : -1.0) * taylor_at_c[j] * std::pow(eps, p) / p;
    }
    values.push_back(bracket);
  }
  std::vector<double> exponents;
  for (int k = 1; k <= ladder.extrapolation_order; ++k) exponents.push_back(k - alpha);
  return extrapolate(ladder.eps_values, values, exponents, evaluations, "epsilon-limit (endpoint)");
}

OracleReport fp_epsilon_oracle(const EntireFunction& g, double c, int n, double alpha,
                               const EpsilonLadder& ladder) {
  const auto taylor = shift(g, c, std::max(n - 1, 0));
  std::vector<double> d(taylor.coeffs.data(), taylor.coeffs.data() + n);
  return fp_epsilon_oracle([g](double x) { return g.eval(x); }, d, c, n, alpha, ladder);
}

OracleReport fp_epsilon_oracle_origin(const PointEvaluator& f, std::span<const double> taylor_at_0,
                                      double a, double rho, const EpsilonLadder& ladder) {
  ladder.validate();
  require_noninteger(rho, "fp_epsilon_oracle_origin");
  require_positive(rho, "order rho");
  require_positive(a, "upper limit a");
  const int divergent = rho > 1.0 ? static_cast<int>(std::ceil(rho - 1.0)) : 0;
  if (static_cast<int>(taylor_at_0.size()) < divergent) {
    throw DomainError("fp_epsilon_oracle_origin: need ceil(rho-1) Taylor coefficients");
  }
  if (ladder.eps_values.front() >= a) throw DomainError("fp_epsilon_oracle_origin: epsilon must be < a");
  const auto options = oracle_quadrature();
  auto integrand = [&](double x) { return f(x) * std::pow(x, -rho); };
  long evaluations = 0;
  std::vector<double> values;
  for (double eps : ladder.eps_values) {
    double integral = 0.0;
    if (std::isinf(a)) {
      const double split = std::max(1.0, 4.0 * eps);
      const auto head = quad::integrate(integrand, eps, split, options);
      const auto tail = quad::integrate_semi_infinite(integrand, split, options);
      integral = head.value + tail.value;
      evaluations += head.evaluations + tail.evaluations;
    } else {
      const auto q = quad::integrate(integrand, eps, a, options);
      integral = q.value;
      evaluations += q.evaluations;
    }
    for (int k = 0; k < divergent; ++k) {
      const double p = k - rho + 1.0;
      integral += taylor_at_0[k] * std::pow(eps, p) / p;
    }
    values.push_back(integral);
  }
  std::vector<double> exponents;
  const double first = divergent - rho + 1.0;
  for (int k = 0; k < ladder.extrapolation_order; ++k) exponents.push_back(first + k);
  return extrapolate(ladder.eps_values, values, exponents, evaluations, "epsilon-limit (origin)");
}

OracleReport fp_epsilon_oracle_origin(const EntireFunction& f, double a, double rho,
                                      const EpsilonLadder& ladder) {
  const int divergent = rho > 1.0 ? static_cast<int>(std::ceil(rho - 1.0)) : 0;
  std::vector<double> c(divergent);
  for (int k = 0; k < divergent; ++k) c[k] = f.coeff(k);
  return fp_epsilon_oracle_origin([f](double x) { return f.eval(x); }, c, a, rho, ladder);
}

EpsilonLadder default_endpoint_ladder(double c) {
  return EpsilonLadder::geometric(0.25 * c, 0.6, 8, 5);
}

EpsilonLadder default_origin_ladder(double rho, double a) {
  const double first = std::min(0.5, 0.5 * a);
  // Keep ε^{1-ρ} below ~1e8 so the bracket cancellation stays harmless.
  double floor = rho > 1.0 ? std::clamp(std::pow(1e8, -1.0 / (rho - 1.0)), 1e-3, 0.2) : 1e-3;
  floor = std::min(floor, 0.25 * first);
  const int rungs = 9;
  const double ratio = std::pow(floor / first, 1.0 / (rungs - 1));
  return EpsilonLadder::geometric(first, ratio, rungs, 6);
}

}  // namespace fpst
