#pragma once

// Mollified first and second moments of L(1/2, chi) over the even characters
// of X_{p,m}, and the Cauchy-Schwarz count of nonvanishing central values.

#include <complex>
#include <cstdint>
#include <vector>

#include "lfl/characters.hpp"
#include "lfl/modular_core.hpp"

namespace lfl {

/// x_h = mu(h) (1 - log h / log H) for h = 1..H, with x_1 = 1.
/// Element h - 1 holds x_h. Throws OutOfRange for H = 0.
std::vector<double> mollifier_coeffs(u64 H);

/// log L^2 = log(p/pi) + psi(1/4) + 2 gamma.
double log_L_squared(u64 p);

struct TwistedMoments {
  cplx A;               ///< sum over X+ of chi(h) L(1/2, chi)
  double B = 0.0;       ///< sum over X+ of chi(h) conj(chi(k)) |L(1/2, chi)|^2
  double B_imag = 0.0;  ///< imaginary residue of B before it was dropped
  double A_main = 0.0;  ///< m delta(h) / 2
  double B_main = 0.0;  ///< m (p-1) / (2 p sqrt(hk)) log(L^2 / (hk))
};

/// Throws NotADivisor, SharedFactorWithP, NonCoprimePair (gcd(h, k) > 1).
TwistedMoments twisted_moments(const PrimeContext& ctx, u64 d, u64 h, u64 k);

struct MollifierOptions {
  bool exclude_principal = false;
};

struct MollifiedMoments {
  double C = 0.0;
  double D = 0.0;
  double C_imag = 0.0;  ///< imaginary residue of C before it was dropped
  u64 character_count = 0;
};

/// C = sum M(chi) L(1/2, chi), D = sum |M(chi) L(1/2, chi)|^2 over X+ with
/// M(chi) = sum_{h <= H} x_h chi(h) / sqrt(h).
/// Throws NotADivisor, EvenOrder, MollifierTooLong (H >= p), OutOfRange (H = 0).
MollifiedMoments mollified_moments(const PrimeContext& ctx, u64 d, u64 H, const MollifierOptions& opts = {});

struct MollifierReport {
  u64 p = 0;
  u64 d = 0;
  u64 m = 0;
  u64 H = 0;
  std::vector<double> coeffs;
  double C = 0.0;
  double D = 0.0;
  u64 character_count = 0;  ///< #X+ (after the optional principal exclusion)
  u64 count_nonzero = 0;
  double lower_bound = 0.0;  ///< C^2 / D
  double proportion = 0.0;   ///< count_nonzero / character_count
  double epsilon_nv = 0.0;
  double predicted_D_shape = 0.0;  ///< 1 + log p / log H (infinite for H = 1)
  double theta_ratio = 0.0;        ///< log theta(m, p) / log p (NaN for d = 1)
  bool principal_excluded = false;
  std::vector<u64> characters;     ///< j of each even character used
  std::vector<double> abs_values;  ///< |L(1/2, chi_j)| in the same order
};

/// Throws as mollified_moments, plus OutOfRange (epsilon_nv <= 0) and
/// DegenerateD (D < 1e-12).
MollifierReport nonvanishing_report(const PrimeContext& ctx, u64 d, u64 H, double epsilon_nv,
                                    const MollifierOptions& opts = {});

}  // namespace lfl
