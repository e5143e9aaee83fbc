#pragma once

#include <string>
#include <vector>

#include "fpst/entire.hpp"
#include "fpst/fpi.hpp"
#include "fpst/series.hpp"

namespace fpst {

/// Parameters of S(ω) = ∫_0^a f(x)/(ω+x)^{n+α} dx.
struct StieltjesQuery {
  double omega = 0.0;
  double a = kInfinity;
  int n = 1;
  double alpha = 0.5;

  [[nodiscard]] double lambda() const noexcept { return n + alpha; }
  /// Throws DomainError for ω <= 0, a <= 0, n < 1 or α outside (0, 1), and
  /// ConvergenceError for ω == a.
  void validate() const;
};

struct ExpansionResult {
  std::vector<double> naive_partial_sums;  // cumulative over j
  double singular_term = 0.0;
  double total = 0.0;
  double tail_estimate = 0.0;
  int terms_used = 0;

  [[nodiscard]] double naive_sum() const {
    return naive_partial_sums.empty() ? 0.0 : naive_partial_sums.back();
  }
};

/// Naive series Σ_j C(-λ, j) ω^j ⨍_0^a f/x^{λ+j} plus the singular term.
/// For ω > a the naive terms grow and the sum ends in ConvergenceError.
[[nodiscard]] ExpansionResult eval_stieltjes(const EntireFunction& f, const StieltjesQuery& q,
                                             const SeriesControl& control = {});

/// ∫_0^a f(x)/√(ω²+x²) dx as Σ_k C(-1/2, k) ω^{2k} ⨍_0^a f/x^{2k+1} plus the
/// logarithmic correction. a = ∞ needs the Gaussian family.
[[nodiscard]] ExpansionResult eval_sqrt_transform(const EntireFunction& f, double omega, double a,
                                                  const SeriesControl& control = {});

/// Correction term of the √ kernel alone.
[[nodiscard]] FinitePartValue sqrt_singular_term(const EntireFunction& f, double omega,
                                                 const SeriesControl& control = {});

/// Order of the zero of f at 0: the first k with |c_k| >= 1e-14 times the
/// largest coefficient magnitude among the first `window` terms. Throws
/// DomainError for the zero function.
[[nodiscard]] int zero_order(const EntireFunction& f, int window = 64);

enum class DominantSource { singular, naive };

[[nodiscard]] std::string to_string(DominantSource source);

struct DominantTerm {
  double coefficient = 0.0;
  double power = 0.0;  // S ~ coefficient * ω^power
  DominantSource source = DominantSource::naive;
  int zero_order = 0;

  [[nodiscard]] double predict(double omega) const;
};

/// Leading small-ω behaviour of S. A zero of order m < n makes the singular
/// term dominate with power m + 1 - n - α; otherwise the naive j = 0 term
/// (an ordinary integral) sets the constant.
[[nodiscard]] DominantTerm dominant_term(const EntireFunction& f, const StieltjesQuery& q,
                                         const SeriesControl& control = {});

}  // namespace fpst
