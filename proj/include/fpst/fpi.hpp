#pragma once

#include <functional>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "fpst/entire.hpp"
#include "fpst/series.hpp"

namespace fpst {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Value of a Hadamard finite-part integral with truncation diagnostics.
struct FinitePartValue {
  double value = 0.0;
  int terms_used = 0;
  double tail_estimate = 0.0;  // absolute
};

/// Decreasing ε values for the limit-definition oracle.
struct EpsilonLadder {
  std::vector<double> eps_values;
  int extrapolation_order = 3;

  /// first, first*ratio, first*ratio², ... (`rungs` values).
  static EpsilonLadder geometric(double first, double ratio, int rungs, int order);
  /// Throws DomainError unless strictly decreasing, positive, >= 4 rungs and
  /// order + 1 <= rungs.
  void validate() const;
};

/// Reference value produced by an independent route (quadrature,
/// ε-extrapolation) together with its error estimate.
struct OracleReport {
  double value = 0.0;
  double error_estimate = 0.0;
  long evaluations = 0;
  std::string method;
};

/// True when rho is within 1e-12 of an integer.
[[nodiscard]] bool is_integer_order(double rho) noexcept;

/// ⨍_0^a f(x)/x^ρ dx for non-integer ρ > 0.
///
/// Finite a: Σ_k c_k a^{k-ρ+1}/(k-ρ+1). a = ∞ dispatches to the closed-form
/// catalog (exponential with b < 0, power_exp, gauss_exp); other families
/// raise MissingClosedFormError.
[[nodiscard]] FinitePartValue fp_origin_noninteger(const EntireFunction& f, double a, double rho,
                                                   const SeriesControl& control = {});

/// ⨍_0^a f(x)/x^m dx for integer m >= 1 and finite a, with the logarithmic
/// convention c_{m-1} ln a + Σ_{k≠m-1} c_k a^{k-m+1}/(k-m+1). a = ∞ forwards
/// to fp_origin_integer_infinite.
[[nodiscard]] FinitePartValue fp_origin_integer(const EntireFunction& f, double a, int m,
                                                const SeriesControl& control = {});

/// ⨍_0^∞ f(x)/x^m dx for the Gaussian family e^{-αx²+βx}, α > 0.
[[nodiscard]] FinitePartValue fp_origin_integer_infinite(const EntireFunction& f, int m,
                                                         const SeriesControl& control = {});

/// Same Gaussian finite part assembled term by term from the e^{βx} split,
/// valid for any m >= 1. Kept as an independent route for cross-checks.
[[nodiscard]] FinitePartValue fp_gaussian_split(double alpha, double beta, int m,
                                                const SeriesControl& control = {});

/// ⨍_0^c g(x)/(c-x)^ρ dx = Σ_j g^{(j)}(c)(-1)^j c^{j+1-ρ}/(j!(j+1-ρ)),
/// with g^{(j)}(c)/j! taken from the shifted expansion about c.
[[nodiscard]] FinitePartValue fp_endpoint(const EntireFunction& g, double c, double rho,
                                          const SeriesControl& control = {});

/// Singular contribution -⨍_0^ω f(x-ω)/x^{n+α} dx
///   = -Σ_j f^{(j)}(-ω) ω^{j-n-α+1}/(j!(j+1-n-α)).
[[nodiscard]] FinitePartValue fp_singular_term(const EntireFunction& f, double omega, int n,
                                               double alpha, const SeriesControl& control = {});

using PointEvaluator = std::function<double(double)>;

/// Limit-definition oracle for the upper-endpoint finite part
/// ⨍_0^c g(x)/(c-x)^{n+α} dx.
///
/// `taylor_at_c` holds d_j = g^{(j)}(c)/j! for j < n (the divergent group).
/// For each rung the bracket ∫_0^{c-ε} g/(c-x)^{n+α} dx + Σ_{j<n} d_j (-1)^j
/// ε^{j+1-n-α}/(j+1-n-α) is integrated adaptively, then extrapolated to
/// ε → 0 on the residual model Σ_k r_k ε^{k-α}.
[[nodiscard]] OracleReport fp_epsilon_oracle(const PointEvaluator& g,
                                             std::span<const double> taylor_at_c, double c, int n,
                                             double alpha, const EpsilonLadder& ladder);
/// Convenience overload reading g and its Taylor data from an EntireFunction.
[[nodiscard]] OracleReport fp_epsilon_oracle(const EntireFunction& g, double c, int n, double alpha,
                                             const EpsilonLadder& ladder);

/// Limit-definition oracle at the origin: ⨍_0^a f(x)/x^ρ dx (a may be ∞) from
/// ∫_ε^a f/x^ρ dx + Σ_{k<ρ-1} c_k ε^{k-ρ+1}/(k-ρ+1), extrapolated in ε.
/// `taylor_at_0` must hold at least c_0..c_{⌈ρ-1⌉-1}.
[[nodiscard]] OracleReport fp_epsilon_oracle_origin(const PointEvaluator& f,
                                                    std::span<const double> taylor_at_0, double a,
                                                    double rho, const EpsilonLadder& ladder);
[[nodiscard]] OracleReport fp_epsilon_oracle_origin(const EntireFunction& f, double a, double rho,
                                                    const EpsilonLadder& ladder);

/// Default ladders used by the CLI and the verification suite.
[[nodiscard]] EpsilonLadder default_endpoint_ladder(double c);
[[nodiscard]] EpsilonLadder default_origin_ladder(double rho, double a = kInfinity);

}  // namespace fpst
