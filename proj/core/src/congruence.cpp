#include "lfl/congruence.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "lfl/error.hpp"

namespace lfl {

namespace {

u64 checked_residue(u64 p, u64 lambda) {
  const u64 x = lambda % p;
  if (x == 0) throw Error(Errc::ZeroResidue, "lambda divisible by p");
  return x;
}

/// Scan s = 1 .. while s < min(best, limit).
CongruenceRecord scan(u64 p, u64 lambda, u64 limit) {
  CongruenceRecord rec{lambda, std::numeric_limits<u64>::max(), 0, 0};
  u64 r = 0;
  for (u64 s = 1; s < rec.rho && s < limit; ++s) {
    r += lambda;
    if (r >= p) r -= p;
    const u64 prod = r * s;
    if (prod < rec.rho) {
      rec.rho = prod;
      rec.r = r;
      rec.s = s;
    }
  }
  return rec;
}

void check_divisor(const PrimeContext& ctx, u64 d) {
  if (d == 0 || ctx.order() % d != 0) {
    throw Error(Errc::NotADivisor, std::to_string(d) + " does not divide " + std::to_string(ctx.order()));
  }
}

}  // namespace

CongruenceRecord rho(const PrimeContext& ctx, u64 lambda) {
  const u64 x = checked_residue(ctx.p(), lambda);
  auto rec = scan(ctx.p(), x, std::numeric_limits<u64>::max());
  rec.lambda = x;
  return rec;
}

CongruenceRecord rho_bruteforce(const PrimeContext& ctx, u64 lambda) {
  const u64 p = ctx.p();
  const u64 x = checked_residue(p, lambda);
  CongruenceRecord best{x, std::numeric_limits<u64>::max(), 0, 0};
  for (u64 s = 1; s <= p; ++s) {
    for (u64 r = 1; r <= p && r * s < best.rho; ++r) {
      if ((r + p - x * s % p) % p == 0) best = {x, r * s, r, s};
    }
  }
  return best;
}

std::optional<CongruenceRecord> rho_below(u64 p, u64 lambda, u64 limit) {
  const u64 x = checked_residue(p, lambda);
  auto rec = scan(p, x, limit);
  if (rec.rho < limit) {
    rec.lambda = x;
    return rec;
  }
  return std::nullopt;
}

ThetaResult theta(const PrimeContext& ctx, u64 d) {
  check_divisor(ctx, d);
  if (d == 1) throw Error(Errc::EmptySubgroupMin, "G_m = {1} has no nontrivial element");
  const auto sub = subgroup(ctx, d);
  ThetaResult out{std::numeric_limits<u64>::max(), 0, 0.0};
  for (u64 lambda : sub.elements()) {
    if (lambda == 1) continue;
    const u64 v = rho(ctx, lambda).rho;
    if (v < out.value) {
      out.value = v;
      out.argmin = lambda;
    }
  }
  out.exponent_ratio = std::log(static_cast<double>(out.value)) * static_cast<double>(euler_phi(d)) /
                       std::log(static_cast<double>(ctx.p()));
  return out;
}

double r_alpha(const PrimeContext& ctx, u64 d, double alpha) {
  check_divisor(ctx, d);
  if (!(alpha > 0.0)) throw Error(Errc::OutOfRange, "alpha must be positive");
  const auto sub = subgroup(ctx, d);
  double sum = 0.0;
  for (u64 lambda : sub.elements()) {
    if (lambda == 1) continue;
    sum += std::pow(static_cast<double>(rho(ctx, lambda).rho), -alpha);
  }
  return sum;
}

u64 farey_membership_count(const PrimeContext& ctx, u64 d, u64 ell) {
  check_divisor(ctx, d);
  const u64 p = ctx.p();
  if (ell < 1 || ell >= p) throw Error(Errc::OutOfRange, "ell must satisfy 1 <= ell < p");
  const u64 m = ctx.order() / d;
  std::vector<char> seen(p, 0);
  u64 count = 0;
  for (u64 s = 1; s <= ell; ++s) {
    const u64 inv = invmod(s, p);
    for (u64 r = 1; r <= ell; ++r) {
      const u64 q = mulmod(r, inv, p);
      for (u64 lambda : {q, p - q}) {
        if (seen[lambda]) continue;
        seen[lambda] = 1;
        if (ctx.dlog_table()[lambda] % m == 0) ++count;
      }
    }
  }
  return count;
}

HyperbolaCount hyperbola_count(const PrimeContext& ctx, u64 lambda, double z1, double z2) {
  const u64 p = ctx.p();
  const u64 x = checked_residue(p, lambda);
  if (!(z1 >= 1.0) || !(z2 >= 1.0)) throw Error(Errc::OutOfRange, "z1, z2 must be >= 1");
  const auto r_lo = static_cast<u64>(std::floor(z1)) + 1;
  const auto r_hi = static_cast<u64>(std::floor(2.0 * z1));
  const auto s_lo = static_cast<u64>(std::floor(z2)) + 1;
  const auto s_hi = static_cast<u64>(std::floor(2.0 * z2));
  HyperbolaCount out{0, 1.0 + z1 * z2 / static_cast<double>(p)};
  for (u64 s = s_lo; s <= s_hi; ++s) {
    const u64 r0 = mulmod(x, s % p, p);
    // First r >= r_lo with r = r0 (mod p).
    u64 r = r_lo <= r0 ? r0 : r0 + (r_lo - r0 + p - 1) / p * p;
    for (; r <= r_hi; r += p) {
      if (r != 0 && std::gcd(r, s) == 1) ++out.count;
    }
  }
  return out;
}

}  // namespace lfl
