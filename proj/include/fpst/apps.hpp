#pragma once

#include "fpst/series.hpp"

namespace fpst::apps {

/// Value of a series-based evaluator with its truncation diagnostics.
struct SeriesValue {
  double value = 0.0;
  int terms_used = 0;
  double tail_estimate = 0.0;
};

/// ₂F₁(n+α, r; s; -ζ) parameters.
struct Gauss2F1Params {
  int n = 1;
  double alpha = 0.5;
  int r = 1;
  int s = 2;
  double zeta = 2.0;

  [[nodiscard]] double lambda() const noexcept { return n + alpha; }
  void validate() const;
};

/// U(n, 1-α, ω) parameters.
struct KummerParams {
  int n = 1;
  double alpha = 0.5;
  double omega = 0.1;

  [[nodiscard]] double lambda() const noexcept { return n + alpha; }
  void validate() const;
};

// ₂F₁(n+α, r; s; -ζ), ζ > 1.

/// Convergent j-series in 1/ζ with b_j weights plus the finite s-r group.
[[nodiscard]] SeriesValue gauss2f1_expansion(const Gauss2F1Params& p, const SeriesControl& control = {});
/// Same value grouped as two ₂F₁ of argument -1/ζ.
[[nodiscard]] SeriesValue gauss2f1_two_hypergeometric(const Gauss2F1Params& p,
                                                      const SeriesControl& control = {});
/// Leading large-ζ terms ∝ ζ^{-n-α} and ζ^{-r}.
[[nodiscard]] double gauss2f1_large_zeta(const Gauss2F1Params& p);
/// (4/(15ζ²))[2 - (2+5ζ)(1+ζ)^{-5/2}] = ₂F₁(7/2, 2; 3; -ζ).
[[nodiscard]] double prudnikov_special_case(double zeta);

// U(n, 1-α, ω).

/// Power series in ω with the e^ω-weighted companion series.
[[nodiscard]] SeriesValue kummer_u(const KummerParams& p, const SeriesControl& control = {});
/// Same value grouped as two ₁F₁.
[[nodiscard]] SeriesValue kummer_u_two_hypergeometric(const KummerParams& p,
                                                      const SeriesControl& control = {});
/// Γ(α)/Γ(n+α) + ω^α Γ(-α)/(n-1)!.
[[nodiscard]] double kummer_u_leading(const KummerParams& p);
/// The small-ω pair as printed in the source derivation:
/// Γ(α)/Γ(n+α) - ω^α Γ(α)/(n-1)!.
[[nodiscard]] double kummer_u_leading_printed(const KummerParams& p);
/// U(2, 1/2, ω) in closed form with erfc evaluated at `erfc_argument`.
[[nodiscard]] double kummer_u2_half_closed_form(double omega, double erfc_argument);

// ∫_0^∞ e^{-αx²+βx}/√(ω²+x²) dx.

[[nodiscard]] SeriesValue gaussian_sqrt(double alpha, double beta, double omega,
                                        const SeriesControl& control = {});
/// -(1/2)(ln(αω²/4)+γ) + (1/2)Σ_{n>=1} Γ(n/2)/n! (β/√α)^n - βω.
[[nodiscard]] double gaussian_sqrt_leading(double alpha, double beta, double omega,
                                           const SeriesControl& control = {});
/// β^{2j+1} A_j and β^{2j} B_j in product form (finite at β = 0).
[[nodiscard]] double gaussian_a_scaled(double alpha, double beta, int j);
[[nodiscard]] double gaussian_b_scaled(double alpha, double beta, int j);

/// K₀(x) from the e^{-x}-weighted ψ series; 0 < x <= 5.
[[nodiscard]] SeriesValue bessel_k0(double x, const SeriesControl& control = {});

// Hypergeometric series and the closed-form identities behind the expansions.

/// Σ (a)_k (b)_k/((c)_k k!) z^k for |z| < 1 (terminating for b a non-positive integer).
[[nodiscard]] double hyp2f1_series(double a, double b, double c, double z,
                                   const SeriesControl& control = {});
[[nodiscard]] double hyp1f1_series(double a, double b, double z, const SeriesControl& control = {});

/// b_j = Γ(r-λ-j)/Γ(s-λ-j) and its defining finite sum over k <= s-r-1.
[[nodiscard]] double b_coefficient(int r, int s, double lambda, int j);
[[nodiscard]] double b_coefficient_sum(int r, int s, double lambda, int j);
/// m_j = Γ(1-λ)/Γ(2+j-λ) and Σ_{k<=j} (-1)^k/(k!(k+1-λ)(j-k)!).
[[nodiscard]] double m_coefficient(double lambda, int j);
[[nodiscard]] double m_coefficient_sum(double lambda, int j);
/// Γ(1-α-n+r)/Γ(1-α+r) and Σ_{l<n} (-1)^l/((r+l-α-n+1) l! (n-l-1)!).
[[nodiscard]] double kummer_inner(int n, double alpha, int r);
[[nodiscard]] double kummer_inner_sum(int n, double alpha, int r);

}  // namespace fpst::apps
