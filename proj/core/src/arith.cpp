#include "lfl/arith.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace lfl {

u64 invmod(u64 a, u64 m) {
  i64 old_r = static_cast<i64>(a % m), r = static_cast<i64>(m);
  i64 old_s = 1, s = 0;
  while (r != 0) {
    const i64 q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_s -= q * s;
    std::swap(old_s, s);
  }
  if (old_r != 1) throw std::domain_error("invmod: argument not invertible");
  const i64 mm = static_cast<i64>(m);
  return static_cast<u64>(((old_s % mm) + mm) % mm);
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  static constexpr std::array<u64, 12> kBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 b : kBases) {
    if (n % b == 0) return n == b;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (u64 a : kBases) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> out;
  for (u64 q = 2; q * q <= n; q += (q == 2 ? 1 : 2)) {
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<u64> divisors(u64 n) {
  std::vector<u64> small, large;
  for (u64 q = 1; q * q <= n; ++q) {
    if (n % q == 0) {
      small.push_back(q);
      if (q != n / q) large.push_back(n / q);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

u64 euler_phi(u64 n) {
  u64 result = n;
  for (u64 q : prime_factors(n)) result = result / q * (q - 1);
  return result;
}

u64 multiplicative_order(u64 x, u64 p, const std::vector<u64>& factors) {
  u64 order = p - 1;
  for (u64 q : factors) {
    while (order % q == 0 && powmod(x, order / q, p) == 1) order /= q;
  }
  return order;
}

u64 smallest_primitive_root(u64 p) {
  if (p == 2) return 1;
  const auto factors = prime_factors(p - 1);
  for (u64 g = 2; g < p; ++g) {
    bool ok = true;
    for (u64 q : factors) {
      if (powmod(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw std::domain_error("smallest_primitive_root: no primitive root");
}

std::vector<u64> primes_in_range(u64 lo, u64 hi) {
  std::vector<u64> out;
  if (hi < 2 || lo > hi) return out;
  lo = std::max<u64>(lo, 2);
  // Segmented sieve over [lo, hi] using base primes up to sqrt(hi).
  const auto root = static_cast<u64>(std::sqrt(static_cast<long double>(hi))) + 1;
  std::vector<char> base(root + 1, 1);
  std::vector<u64> small_primes;
  for (u64 i = 2; i <= root; ++i) {
    if (!base[i]) continue;
    small_primes.push_back(i);
    for (u64 j = i * i; j <= root; j += i) base[j] = 0;
  }
  std::vector<char> mark(hi - lo + 1, 1);
  for (u64 q : small_primes) {
    u64 start = std::max(q * q, (lo + q - 1) / q * q);
    for (u64 j = start; j <= hi; j += q) mark[j - lo] = 0;
  }
  for (u64 i = 0; i < mark.size(); ++i) {
    if (mark[i]) out.push_back(lo + i);
  }
  return out;
}

std::vector<int> mobius_table(std::size_t n) {
  std::vector<int> mu(n + 1, 0);
  if (n == 0) return mu;
  mu[1] = 1;
  std::vector<std::size_t> primes;
  std::vector<char> composite(n + 1, 0);
  for (std::size_t i = 2; i <= n; ++i) {
    if (!composite[i]) {
      primes.push_back(i);
      mu[i] = -1;
    }
    for (std::size_t q : primes) {
      if (i * q > n) break;
      composite[i * q] = 1;
      if (i % q == 0) {
        mu[i * q] = 0;
        break;
      }
      mu[i * q] = -mu[i];
    }
  }
  return mu;
}

}  // namespace lfl
