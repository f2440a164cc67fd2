#pragma once

// Moments of |L(1, chi)| and |L(1/2, chi)| over the characters trivial on a
// subgroup G_m, with their predicted main terms.

#include <cstdint>
#include <string>
#include <vector>

#include "lfl/modular_core.hpp"

namespace lfl {

/// Default cutoff for the partial sums of a(k).
inline constexpr u64 kAkCutoff = 1'000'000;

struct AkConstant {
  unsigned k = 0;
  u64 cutoff = 0;
  double value = 0.0;       ///< sum_{n <= N} tau_k(n)^2 / n^2
  double tail_bound = 0.0;  ///< rigorous upper bound on the omitted tail
};

/// Partial sum of a(k) = sum tau_k(n)^2 / n^2 plus a tail bound obtained from
/// the Euler product a(k) = prod_q F_k(q^-2),
///   F_k(x) = (1 - x)^(1 - 2k) sum_i C(k-1, i)^2 x^i,
/// taken exactly over primes q <= N and bounded above for q > N.
/// Throws OutOfRange (k = 0, N < 1000 or N above the sieve limit).
AkConstant ak_constant(unsigned k, u64 N = kAkCutoff);

enum class MomentFilter { All, OddOnly };

struct MomentReport {
  u64 p = 0;
  u64 d = 0;
  u64 m = 0;
  unsigned k = 0;
  double s = 1.0;              ///< evaluation point: 1 or 1/2
  std::string filter;          ///< "all", "odd" or "even"
  double value = 0.0;
  double main_term = 0.0;
  double deviation = 0.0;      ///< value - main_term
  u64 character_count = 0;
  std::vector<u64> excluded;   ///< character indices j left out of the sum
  bool degenerate = false;     ///< no character survived the filter
};

/// M_2k(p, m) = (1/m) sum |L(1, chi)|^2k over X_{p,m} without chi_0, or
/// M^-_2k(p, m) = (2/m) sum over the odd characters. main_term = a(k).
/// Throws NotADivisor, EvenOrder.
MomentReport moment_m2k(const PrimeContext& ctx, u64 d, unsigned k, MomentFilter filter);

/// (2/m) sum over even chi in X_{p,m} (chi_0 included) of |L(1/2, chi)|^2
/// with main term log(p/pi) + 2 gamma + psi(1/4). Throws NotADivisor, EvenOrder.
MomentReport second_moment_half(const PrimeContext& ctx, u64 d);

/// log(p/pi) + 2 gamma + psi(1/4).
double second_moment_main_term(u64 p);

/// (1/m) #{chi in X_{p,m} \ {chi_0} : |L(1, chi)| <= x} for each x.
/// Throws NotADivisor.
std::vector<double> empirical_cdf(const PrimeContext& ctx, u64 d, const std::vector<double>& xs);

}  // namespace lfl
