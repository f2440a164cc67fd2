#pragma once

// Elementary number theory on 64-bit integers shared by every module.

#include <cstdint>
#include <vector>

namespace lfl {

using u64 = std::uint64_t;
using i64 = std::int64_t;

constexpr u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}

constexpr u64 powmod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1U) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

/// Modular inverse of a (coprime to m) by the extended Euclidean algorithm.
u64 invmod(u64 a, u64 m);

/// Deterministic Miller-Rabin; exact for every 64-bit input.
bool is_prime(u64 n);

/// Distinct prime factors of n in ascending order (trial division).
std::vector<u64> prime_factors(u64 n);

/// All positive divisors of n in ascending order.
std::vector<u64> divisors(u64 n);

u64 euler_phi(u64 n);

/// Smallest primitive root modulo the odd prime p.
u64 smallest_primitive_root(u64 p);

/// Multiplicative order of x modulo the prime p; `factors` are the distinct
/// prime factors of p - 1.
u64 multiplicative_order(u64 x, u64 p, const std::vector<u64>& factors);

/// Primes in [lo, hi], ascending.
std::vector<u64> primes_in_range(u64 lo, u64 hi);

/// Moebius function mu(0..n) by a linear sieve; index 0 is unused (0).
std::vector<int> mobius_table(std::size_t n);

}  // namespace lfl
