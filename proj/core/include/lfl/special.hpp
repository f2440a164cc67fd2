#pragma once

namespace lfl {

/// Euler-Mascheroni constant.
inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

/// psi(x) = Gamma'(x)/Gamma(x) for x > 0: upward recurrence to x >= 10, then
/// the asymptotic series through x^-14. Absolute error below 1e-12 relative
/// to max(1, |psi(x)|). Throws NonPositive.
double digamma(double x);

/// Hurwitz zeta sum_{n>=0} (n + x)^-s for x > 0, s > 0, s != 1, by
/// Euler-Maclaurin with 50 direct terms and Bernoulli corrections through
/// B_10. Throws PoleAtOne or NonPositive.
double hurwitz_zeta(double s, double x);

/// Exponential integral E_1(y) = int_y^inf e^-t / t dt, y > 0.
double expint_e1(double y);

}  // namespace lfl
