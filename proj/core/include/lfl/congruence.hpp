#pragma once

// Minimal products of solutions to r = lambda s (mod p) over positive
// integers, and the subgroup statistics built on them.

#include <cstdint>
#include <optional>

#include "lfl/modular_core.hpp"

namespace lfl {

struct CongruenceRecord {
  u64 lambda = 0;
  u64 rho = 0;
  u64 r = 0;  ///< witness: r = lambda s (mod p), r s = rho
  u64 s = 0;
};

/// rho(lambda, p) = min{ r s : r, s >= 1, r = lambda s (mod p) }.
/// Scans s = 1, 2, ... with r(s) = lambda s mod p and stops once s reaches
/// the best product, so the cost is O(rho). Throws ZeroResidue.
CongruenceRecord rho(const PrimeContext& ctx, u64 lambda);

/// Exhaustive search over r, s in [1, p]; test oracle for rho().
CongruenceRecord rho_bruteforce(const PrimeContext& ctx, u64 lambda);

/// The rho scan cut off at `limit`: returns the record only when rho < limit.
std::optional<CongruenceRecord> rho_below(u64 p, u64 lambda, u64 limit);

struct ThetaResult {
  u64 value = 0;
  u64 argmin = 0;  ///< smallest lambda attaining the minimum
  /// log(theta) * phi(d) / log(p): compares theta with p^(1/phi(d)). Report only.
  double exponent_ratio = 0.0;
};

/// min over lambda in G_m \ {1} of rho(lambda, p).
/// Throws NotADivisor, EmptySubgroupMin (d = 1).
ThetaResult theta(const PrimeContext& ctx, u64 d);

/// sum over lambda in G_m \ {1} of rho(lambda, p)^-alpha, ascending lambda.
/// Throws NotADivisor, OutOfRange (alpha <= 0).
double r_alpha(const PrimeContext& ctx, u64 d, double alpha);

/// #{lambda in G_m : lambda = r / s (mod p), r, s nonzero, |r|, |s| <= ell}.
/// Throws NotADivisor, OutOfRange (ell < 1 or ell >= p).
u64 farey_membership_count(const PrimeContext& ctx, u64 d, u64 ell);

struct HyperbolaCount {
  u64 count = 0;
  double envelope = 0.0;  ///< 1 + z1 z2 / p
};

/// #{(r, s) : z1 < r <= 2 z1, z2 < s <= 2 z2, gcd(r, s) = 1, r = lambda s (mod p)}.
/// Throws ZeroResidue, OutOfRange (z1 or z2 below 1).
HyperbolaCount hyperbola_count(const PrimeContext& ctx, u64 lambda, double z1, double z2);

}  // namespace lfl
