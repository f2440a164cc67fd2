#include "lfl/moments.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <string>

#include "lfl/arith.hpp"
#include "lfl/error.hpp"
#include "lfl/lvalues.hpp"
#include "lfl/special.hpp"

namespace lfl {

namespace {

constexpr u64 kAkSieveLimit = 30'000'000;

void check_odd_divisor(const PrimeContext& ctx, u64 d) {
  if (d == 0 || ctx.order() % d != 0) {
    throw Error(Errc::NotADivisor, std::to_string(d) + " does not divide " + std::to_string(ctx.order()));
  }
  if (d % 2 == 0) throw Error(Errc::EvenOrder, "subgroup order " + std::to_string(d) + " is even");
}

double binomial(unsigned n, unsigned r) {
  double c = 1.0;
  for (unsigned i = 1; i <= r; ++i) c = c * (n - r + i) / i;
  return c;
}

/// log F_k(x) for the local Euler factor at a prime with x = q^-2.
double log_local_factor(unsigned k, double x) {
  double poly = 0.0;  // sum_{i >= 1} C(k-1, i)^2 x^i
  double xi = 1.0;
  for (unsigned i = 1; i < k; ++i) {
    xi *= x;
    const double c = binomial(k - 1, i);
    poly += c * c * xi;
  }
  return (1.0 - 2.0 * k) * std::log1p(-x) + std::log1p(poly);
}

double cached_main_term(unsigned k) {
  static std::mutex mu;
  static std::map<unsigned, double> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(k);
  if (it == cache.end()) it = cache.emplace(k, ak_constant(k, kAkCutoff).value).first;
  return it->second;
}

}  // namespace

AkConstant ak_constant(unsigned k, u64 N) {
  if (k == 0) throw Error(Errc::OutOfRange, "k must be >= 1");
  if (N < 1000 || N > kAkSieveLimit) {
    throw Error(Errc::OutOfRange, "cutoff " + std::to_string(N) + " outside [1000, " +
                                      std::to_string(kAkSieveLimit) + "]");
  }
  const auto& tau = tau_k_table(k, N);
  double value = 0.0;
  for (u64 n = N; n >= 1; --n) {
    const double t = static_cast<double>(tau[n]) / static_cast<double>(n);
    value += t * t;
  }

  // Upper bound for log a(k): exact factors for q <= N; for q > N with
  // x = q^-2, log F_k(x) <= x ((2k-1)/(1-x) + C(2k-2, k-1) - 1), and
  // sum_{q > N} q^-2 < 1/N.
  double log_upper = 0.0;
  for (u64 q : primes_in_range(2, N)) {
    const double qd = static_cast<double>(q);
    log_upper += log_local_factor(k, 1.0 / (qd * qd));
  }
  const double Nd = static_cast<double>(N);
  const double ck = (2.0 * k - 1.0) / (1.0 - 1.0 / (Nd * Nd)) + binomial(2 * k - 2, k - 1) - 1.0;
  log_upper += ck / Nd;
  // Relative slack for accumulated rounding in both sums.
  const double upper = std::exp(log_upper) * (1.0 + 1e-10);
  return {k, N, value, std::max(0.0, upper - value)};
}

MomentReport moment_m2k(const PrimeContext& ctx, u64 d, unsigned k, MomentFilter filter) {
  // m = 1 leaves only the principal character: a degenerate but valid family.
  if (d != ctx.order()) check_odd_divisor(ctx, d);
  if (k == 0) throw Error(Errc::OutOfRange, "k must be >= 1");
  MomentReport rep;
  rep.p = ctx.p();
  rep.d = d;
  rep.m = ctx.order() / d;
  rep.k = k;
  rep.s = 1.0;
  rep.filter = filter == MomentFilter::All ? "all" : "odd";
  rep.main_term = cached_main_term(k);

  const auto values = l_one_over_group(ctx, d);
  double sum = 0.0;
  for (u64 u = 1; u < rep.m; ++u) {
    if (filter == MomentFilter::OddOnly && u % 2 == 0) continue;
    sum += std::pow(std::norm(values[u]), static_cast<double>(k));
    ++rep.character_count;
  }
  const double m = static_cast<double>(rep.m);
  if (filter == MomentFilter::All) {
    rep.value = sum / m;
    rep.excluded = {0};
  } else {
    rep.value = 2.0 * sum / m;
  }
  rep.degenerate = rep.character_count == 0;
  rep.deviation = rep.value - rep.main_term;
  return rep;
}

double second_moment_main_term(u64 p) {
  return std::log(static_cast<double>(p) / std::numbers::pi) + 2.0 * kEulerGamma + digamma(0.25);
}

MomentReport second_moment_half(const PrimeContext& ctx, u64 d) {
  check_odd_divisor(ctx, d);
  MomentReport rep;
  rep.p = ctx.p();
  rep.d = d;
  rep.m = ctx.order() / d;
  rep.k = 1;
  rep.s = 0.5;
  rep.filter = "even";
  rep.main_term = second_moment_main_term(ctx.p());

  const auto values = l_half_over_group(ctx, d);
  double sum = 0.0;
  for (u64 u = 0; u < rep.m; u += 2) {
    sum += std::norm(values[u]);
    ++rep.character_count;
  }
  rep.value = 2.0 * sum / static_cast<double>(rep.m);
  rep.deviation = rep.value - rep.main_term;
  return rep;
}

std::vector<double> empirical_cdf(const PrimeContext& ctx, u64 d, const std::vector<double>& xs) {
  const auto values = l_one_over_group(ctx, d);
  const u64 m = values.size();
  std::vector<double> mags;
  mags.reserve(m);
  for (u64 u = 1; u < m; ++u) mags.push_back(std::abs(values[u]));
  std::sort(mags.begin(), mags.end());
  std::vector<double> out;
  out.reserve(xs.size());
  for (double x : xs) {
    const auto below = std::upper_bound(mags.begin(), mags.end(), x) - mags.begin();
    out.push_back(static_cast<double>(below) / static_cast<double>(m));
  }
  return out;
}

}  // namespace lfl
