#pragma once

// Dirichlet L-values modulo a prime at s = 1 and s = 1/2.
//
// Exact routes use finite sums over residues:
//   L(1, chi)   = -(1/p)      sum_a chi(a) psi(a/p)           (chi nonprincipal)
//   L(1/2, chi) =  p^(-1/2)   sum_a chi(a) zeta(1/2, a/p)
// The smoothed route evaluates sum_r chi(r) tau_k(r) r^-1 e^(-r/Z), which
// tends to L(1, chi)^k as Z grows.

#include <complex>
#include <cstdint>
#include <vector>

#include "lfl/characters.hpp"
#include "lfl/modular_core.hpp"

namespace lfl {

enum class LMethod { DigammaExact, HurwitzExact, SmoothedSeries };

const char* to_string(LMethod m) noexcept;

struct LValue {
  CharacterId character;
  double s = 0.0;
  cplx value;
  LMethod method = LMethod::DigammaExact;
  double err_estimate = 0.0;
};

/// Throws PrincipalCharacter for j = 0 mod (p-1).
LValue l_one_exact(const PrimeContext& ctx, u64 j);

LValue l_half_exact(const PrimeContext& ctx, u64 j);

struct SmoothingOptions {
  /// Reject the quadratic character, as the series argument for the k-th
  /// power assumes a non-real character.
  bool strict = false;
  /// Target for the neglected part of the series.
  double tail_tolerance = 1e-9;
  /// Largest r for which tau_k is sieved when k >= 2.
  u64 max_terms = 30'000'000;
};

/// sum_{r >= 1} chi_j(r) tau_k(r) r^-1 e^(-r/Z), Z >= p.
/// k = 1 sums each residue class a + n p separately and closes the class with
/// an Euler-Maclaurin tail (exact up to ~1e-12 for any Z); k >= 2 truncates
/// at R = Z (ln(1/tol) + k ln(2 + ln Z)) using a cached tau_k sieve.
/// Throws PrincipalCharacter, OutOfRange (Z < p, strict and quadratic),
/// BudgetExceeded (R above max_terms).
cplx l_one_smoothed(const PrimeContext& ctx, u64 j, unsigned k, double Z,
                    const SmoothingOptions& opts = {});

/// tau_k(0..n) (entry 0 is 0). Cached per (k, n); read-only after build.
const std::vector<std::uint32_t>& tau_k_table(unsigned k, u64 n);

/// L(1, chi_{d u}) for u = 0..m-1 over the characters trivial on G_m.
/// Entry 0 (principal) is NaN. One folded DFT of length m, O(p + m log m).
std::vector<cplx> l_one_over_group(const PrimeContext& ctx, u64 d);

/// L(1/2, chi_{d u}) for u = 0..m-1, principal included.
std::vector<cplx> l_half_over_group(const PrimeContext& ctx, u64 d);

/// out[u] = sum_t in[t] e(u t / n) for real input of length n; the result
/// satisfies out[n - u] = conj(out[u]) exactly.
std::vector<cplx> real_dft(const std::vector<double>& in);

}  // namespace lfl
