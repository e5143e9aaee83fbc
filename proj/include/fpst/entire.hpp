#pragma once

#include <Eigen/Core>

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fpst/series.hpp"

namespace fpst {

/// Function families with known structure. The finite-part catalog keys its
/// a = ∞ closed forms on these.
enum class Family {
  exponential,  // e^{b x}; exp_neg is b = -1
  power_exp,    // e^{-x} x^{n-1}
  beta_poly,    // x^{r-1} (1-x)^{s-r-1}
  gauss_exp,    // e^{-α x² + β x}
  monomial,     // x^m
  polynomial,   // user coefficient list
  reflected,    // f(-x) view
  translated,   // f(x + x0) view
};

struct FamilyParams {
  int n = 0;
  int r = 0;
  int s = 0;
  int m = 0;
  double alpha = 0.0;
  double beta = 0.0;
  double x0 = 0.0;
};

/// Entire function described by its Taylor coefficients c_k = f^{(k)}(0)/k!.
///
/// Instances are cheap handles to immutable shared state. Coefficients are
/// generated lazily and memoized behind a mutex, so one instance can be
/// shared between threads.
class EntireFunction {
 public:
  /// Coefficient rule: (k, already-computed c_0..c_{k-1}) -> c_k.
  using CoefficientRule = std::function<double(int, std::span<const double>)>;
  using Evaluator = std::function<double(double)>;

  EntireFunction(std::string name, Family family, FamilyParams params,
                 CoefficientRule rule, Evaluator eval = {},
                 std::optional<int> degree = std::nullopt,
                 const EntireFunction* base = nullptr);

  [[nodiscard]] double coeff(int k) const;
  /// c_0 .. c_{count-1}.
  [[nodiscard]] Eigen::VectorXd coefficients(int count) const;

  [[nodiscard]] bool has_eval() const noexcept;
  /// Closed-form value; falls back to the Taylor sum when no evaluator exists.
  [[nodiscard]] double eval(double x) const;
  [[nodiscard]] double taylor_eval(double x, const SeriesControl& control = {}) const;

  /// Highest non-zero power for polynomials, nullopt otherwise.
  [[nodiscard]] std::optional<int> degree() const noexcept;
  [[nodiscard]] const std::string& name() const noexcept;
  [[nodiscard]] Family family() const noexcept;
  [[nodiscard]] const FamilyParams& params() const noexcept;
  /// Underlying function of a reflected/translated view.
  [[nodiscard]] const EntireFunction* base() const noexcept;

 private:
  struct State;
  std::shared_ptr<const State> state_;
};

/// Taylor coefficients d_k = f^{(k)}(x0)/k! about a new center.
struct ShiftedExpansion {
  double center = 0.0;
  Eigen::VectorXd coeffs;
};

/// d_0..d_K with d_k = Σ_{m>=k} c_m C(m,k) x0^{m-k}. Each inner sum uses the
/// shared stopping rule; `control.term_cap` bounds the inner terms.
[[nodiscard]] ShiftedExpansion shift(const EntireFunction& f, double x0, int K,
                                     const SeriesControl& control = {});

/// Single shifted coefficient d_k (the inner sum of `shift`).
[[nodiscard]] double shifted_coefficient(const EntireFunction& f, double x0, int k,
                                         const SeriesControl& control = {});

/// View of f(-x) over the same coefficient stream.
[[nodiscard]] EntireFunction reflect(const EntireFunction& f);
/// View of f(x + x0); its coefficients are the shifted expansion about x0.
[[nodiscard]] EntireFunction translate(const EntireFunction& f, double x0,
                                       const SeriesControl& control = {});

// Built-in families.
[[nodiscard]] EntireFunction exponential(double b);
[[nodiscard]] EntireFunction exp_neg();
[[nodiscard]] EntireFunction power_exp(int n);
[[nodiscard]] EntireFunction beta_poly(int r, int s);
[[nodiscard]] EntireFunction gauss_exp(double alpha, double beta);
[[nodiscard]] EntireFunction monomial(int m);
[[nodiscard]] EntireFunction zero_function();
/// Polynomial from sparse (k, c_k) pairs; repeated k accumulate.
[[nodiscard]] EntireFunction from_coefficients(std::vector<std::pair<int, double>> pairs,
                                               std::string name = "user");

/// Parses "k c_k" lines (# comments allowed) or a JSON array of [k, c_k]
/// pairs / {"k":..,"c":..} objects.
[[nodiscard]] EntireFunction parse_coefficient_text(std::string_view text,
                                                    std::string name = "user");
[[nodiscard]] EntireFunction load_coefficient_file(const std::string& path);

/// Resolves a registry key: exp_neg, exp[b], power_exp[n], beta_poly[r,s],
/// gauss_exp[alpha,beta], monomial[m], zero.
[[nodiscard]] EntireFunction function_from_key(std::string_view key);

struct CatalogEntry {
  std::string key;          // e.g. "power_exp[n]"
  std::string description;
  EntireFunction example;   // instance with representative parameters
};

[[nodiscard]] std::vector<CatalogEntry> builtin_library();

}  // namespace fpst
