#pragma once

#include "fpst/apps.hpp"
#include "fpst/entire.hpp"
#include "fpst/fpi.hpp"

// Independent reference values built from quadrature or classical series,
// used to validate the expansions.
namespace fpst::reference {

/// Default relative tolerance of the quadrature oracles.
inline constexpr double kOracleTol = 1e-13;

/// ∫_0^a f(x)/(ω+x)^λ dx.
[[nodiscard]] OracleReport stieltjes_quadrature(const EntireFunction& f, double omega, double a,
                                                double lambda, double tol = kOracleTol);
/// ∫_0^a f(x)/√(ω²+x²) dx.
[[nodiscard]] OracleReport sqrt_transform_quadrature(const EntireFunction& f, double omega,
                                                     double a, double tol = kOracleTol);
/// U(n, 1-α, ω) = ω^α/(n-1)! ∫_0^∞ e^{-x} x^{n-1}/(ω+x)^{n+α} dx.
[[nodiscard]] OracleReport kummer_u_quadrature(const apps::KummerParams& p, double tol = kOracleTol);
/// ₂F₁(n+α, r; s; -ζ) from its Euler integral on [0, 1].
[[nodiscard]] OracleReport gauss2f1_quadrature(const apps::Gauss2F1Params& p,
                                               double tol = kOracleTol);
/// ∫_0^∞ e^{-αx²+βx}/√(ω²+x²) dx, split at β/(2α) + 10/√α with a mapped tail.
[[nodiscard]] OracleReport gaussian_sqrt_quadrature(double alpha, double beta, double omega,
                                                    double tol = kOracleTol);

/// Ascending series K₀(x) = -(ln(x/2)+γ) I₀(x) + Σ_{k>=1} (x²/4)^k H_k/(k!)².
[[nodiscard]] double bessel_k0_classical(double x);

}  // namespace fpst::reference
