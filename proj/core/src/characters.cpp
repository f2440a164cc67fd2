#include "lfl/characters.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "lfl/error.hpp"

namespace lfl {

cplx unit_root(u64 k, u64 n) {
  k %= n;
  bool flip = false;
  if (2 * k > n) {
    k = n - k;
    flip = true;
  }
  cplx z;
  if (k == 0) {
    z = {1.0, 0.0};
  } else if (2 * k == n) {
    z = {-1.0, 0.0};
  } else if (4 * k == n) {
    z = {0.0, 1.0};
  } else {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
    z = {std::cos(angle), std::sin(angle)};
  }
  return flip ? std::conj(z) : z;
}

std::vector<CharacterId> char_group(const PrimeContext& ctx, u64 d) {
  const u64 n = ctx.order();
  if (d == 0 || n % d != 0) {
    throw Error(Errc::NotADivisor, std::to_string(d) + " does not divide " + std::to_string(n));
  }
  std::vector<CharacterId> out;
  out.reserve(n / d);
  for (u64 j = 0; j < n; j += d) out.push_back({ctx.p(), j});
  return out;
}

u64 char_phase(const PrimeContext& ctx, u64 j, u64 x) {
  const u64 n = ctx.order();
  return mulmod(j % n, ctx.dlog(x), n);
}

cplx eval_char(const PrimeContext& ctx, u64 j, u64 x) {
  return unit_root(char_phase(ctx, j, x), ctx.order());
}

OrthogonalityCheck orthogonality_sum(const PrimeContext& ctx, u64 d, int a, u64 r, u64 s) {
  const u64 n = ctx.order();
  if (d == 0 || n % d != 0) {
    throw Error(Errc::NotADivisor, std::to_string(d) + " does not divide " + std::to_string(n));
  }
  if (d % 2 == 0) throw Error(Errc::EvenOrder, "subgroup order " + std::to_string(d) + " is even");
  const u64 p = ctx.p();
  if (r % p == 0 || s % p == 0) throw Error(Errc::ZeroResidue, "gcd(rs, p) != 1");

  const u64 parity = static_cast<u64>(a & 1);
  // chi(r) conj(chi(s)) = e(j (dlog r - dlog s) / (p-1)).
  const u64 diff = (ctx.dlog(r) + n - ctx.dlog(s)) % n;
  cplx sum{0.0, 0.0};
  for (u64 j = 0; j < n; j += d) {
    if (j % 2 != parity) continue;
    sum += unit_root(mulmod(j, diff, n), n);
  }

  // xi_m(x) = 1 iff dlog(x) is a multiple of m.
  const u64 m = n / d;
  const u64 ratio = mulmod(r % p, invmod(s % p, p), p);
  const double xi_plus = ctx.dlog(ratio) % m == 0 ? 1.0 : 0.0;
  const double xi_minus = ctx.dlog(p - ratio) % m == 0 ? 1.0 : 0.0;
  const double sign = parity == 0 ? 1.0 : -1.0;
  return {sum, static_cast<double>(m) / 2.0 * (xi_plus + sign * xi_minus)};
}

}  // namespace lfl
