#include "lfl/mollifier.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

#include "lfl/congruence.hpp"
#include "lfl/error.hpp"
#include "lfl/lvalues.hpp"
#include "lfl/special.hpp"

namespace lfl {

namespace {

void check_divisor(const PrimeContext& ctx, u64 d) {
  if (d == 0 || ctx.order() % d != 0) {
    throw Error(Errc::NotADivisor, std::to_string(d) + " does not divide " + std::to_string(ctx.order()));
  }
}

/// Even characters chi_{d u} of X_{p,m} with their central values.
struct EvenCharacters {
  u64 m = 0;
  std::vector<u64> u;
  std::vector<cplx> L;
};

EvenCharacters even_characters(const PrimeContext& ctx, u64 d, bool exclude_principal) {
  EvenCharacters out;
  out.m = ctx.order() / d;
  const auto values = l_half_over_group(ctx, d);
  for (u64 u = 0; u < out.m; ++u) {
    if ((d * u) % 2 != 0) continue;
    if (u == 0 && exclude_principal) continue;
    out.u.push_back(u);
    out.L.push_back(values[u]);
  }
  return out;
}

/// chi_{d u}(x) = e(u dlog(x) / m).
cplx subgroup_char(const PrimeContext& ctx, u64 m, u64 u, u64 x) {
  return unit_root(mulmod(u, ctx.dlog(x) % m, m), m);
}

}  // namespace

std::vector<double> mollifier_coeffs(u64 H) {
  if (H == 0) throw Error(Errc::OutOfRange, "mollifier length must be >= 1");
  const auto mu = mobius_table(H);
  std::vector<double> x(H, 0.0);
  x[0] = 1.0;
  const double logH = std::log(static_cast<double>(H));
  for (u64 h = 2; h <= H; ++h) {
    x[h - 1] = mu[h] * (1.0 - std::log(static_cast<double>(h)) / logH);
  }
  return x;
}

double log_L_squared(u64 p) {
  return std::log(static_cast<double>(p) / std::numbers::pi) + digamma(0.25) + 2.0 * kEulerGamma;
}

TwistedMoments twisted_moments(const PrimeContext& ctx, u64 d, u64 h, u64 k) {
  check_divisor(ctx, d);
  const u64 p = ctx.p();
  if (h == 0 || k == 0 || h % p == 0 || k % p == 0) {
    throw Error(Errc::SharedFactorWithP, "h and k must be positive and prime to p");
  }
  if (std::gcd(h, k) != 1) throw Error(Errc::NonCoprimePair, "gcd(h, k) > 1");

  const auto chars = even_characters(ctx, d, false);
  const u64 m = chars.m;
  TwistedMoments out;
  cplx B{0.0, 0.0};
  for (std::size_t i = 0; i < chars.u.size(); ++i) {
    const cplx chi_h = subgroup_char(ctx, m, chars.u[i], h);
    const cplx chi_k = subgroup_char(ctx, m, chars.u[i], k);
    out.A += chi_h * chars.L[i];
    B += chi_h * std::conj(chi_k) * std::norm(chars.L[i]);
  }
  out.B = B.real();
  out.B_imag = B.imag();
  const double md = static_cast<double>(m);
  const double hk = static_cast<double>(h) * static_cast<double>(k);
  out.A_main = h == 1 ? md / 2.0 : 0.0;
  out.B_main = md * static_cast<double>(p - 1) / (2.0 * static_cast<double>(p) * std::sqrt(hk)) *
               (log_L_squared(p) - std::log(hk));
  return out;
}

namespace {

void check_mollifier_args(const PrimeContext& ctx, u64 d, u64 H) {
  check_divisor(ctx, d);
  if (d % 2 == 0) throw Error(Errc::EvenOrder, "subgroup order " + std::to_string(d) + " is even");
  if (H == 0) throw Error(Errc::OutOfRange, "mollifier length must be >= 1");
  if (H >= ctx.p()) throw Error(Errc::MollifierTooLong, "H must be smaller than p");
}

MollifiedMoments mollify(const PrimeContext& ctx, const EvenCharacters& chars, const std::vector<double>& coeffs) {
  const u64 m = chars.m;
  const u64 H = coeffs.size();
  std::vector<u64> dlog_h(H + 1, 0);
  std::vector<double> weight(H + 1, 0.0);
  for (u64 h = 1; h <= H; ++h) {
    dlog_h[h] = ctx.dlog(h) % m;
    weight[h] = coeffs[h - 1] / std::sqrt(static_cast<double>(h));
  }

  MollifiedMoments out;
  out.character_count = chars.u.size();
  cplx C{0.0, 0.0};
  for (std::size_t i = 0; i < chars.u.size(); ++i) {
    cplx M{0.0, 0.0};
    for (u64 h = 1; h <= H; ++h) {
      if (weight[h] == 0.0) continue;
      M += weight[h] * unit_root(mulmod(chars.u[i], dlog_h[h], m), m);
    }
    const cplx ML = M * chars.L[i];
    C += ML;
    out.D += std::norm(ML);
  }
  out.C = C.real();
  out.C_imag = C.imag();
  return out;
}

}  // namespace

MollifiedMoments mollified_moments(const PrimeContext& ctx, u64 d, u64 H, const MollifierOptions& opts) {
  check_mollifier_args(ctx, d, H);
  return mollify(ctx, even_characters(ctx, d, opts.exclude_principal), mollifier_coeffs(H));
}

MollifierReport nonvanishing_report(const PrimeContext& ctx, u64 d, u64 H, double epsilon_nv,
                                    const MollifierOptions& opts) {
  check_mollifier_args(ctx, d, H);
  if (!(epsilon_nv > 0.0)) throw Error(Errc::OutOfRange, "epsilon_nv must be positive");
  const auto chars = even_characters(ctx, d, opts.exclude_principal);
  const auto coeffs = mollifier_coeffs(H);
  const auto moments = mollify(ctx, chars, coeffs);
  if (moments.D < 1e-12) throw Error(Errc::DegenerateD, "mollified second moment vanishes");

  MollifierReport rep;
  rep.p = ctx.p();
  rep.d = d;
  rep.m = ctx.order() / d;
  rep.H = H;
  rep.coeffs = coeffs;
  rep.C = moments.C;
  rep.D = moments.D;
  rep.character_count = moments.character_count;
  rep.epsilon_nv = epsilon_nv;
  rep.principal_excluded = opts.exclude_principal;

  for (std::size_t i = 0; i < chars.u.size(); ++i) {
    const double a = std::abs(chars.L[i]);
    rep.characters.push_back(d * chars.u[i]);
    rep.abs_values.push_back(a);
    if (a > epsilon_nv) ++rep.count_nonzero;
  }
  rep.lower_bound = rep.C * rep.C / rep.D;
  rep.proportion = static_cast<double>(rep.count_nonzero) / static_cast<double>(rep.character_count);
  const double logp = std::log(static_cast<double>(ctx.p()));
  rep.predicted_D_shape = H == 1 ? std::numeric_limits<double>::infinity()
                                 : 1.0 + logp / std::log(static_cast<double>(H));
  rep.theta_ratio = d >= 2 ? std::log(static_cast<double>(theta(ctx, d).value)) / logp
                           : std::numeric_limits<double>::quiet_NaN();
  return rep;
}

}  // namespace lfl
