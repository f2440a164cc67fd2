#include "lfl/prime_survey.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <numeric>
#include <string>

#include "lfl/congruence.hpp"
#include "lfl/error.hpp"
#include "lfl/moments.hpp"
#include "lfl/modular_core.hpp"
#include "lfl/parallel.hpp"

namespace lfl {

u64 CyclotomicPoly::l1_norm() const noexcept {
  u64 s = 0;
  for (i64 a : coeffs) s += static_cast<u64>(std::llabs(a));
  return s;
}

double CyclotomicPoly::norm_bound() const {
  const double phi = static_cast<double>(degree());
  return std::sqrt(phi + 1.0) * std::ldexp(1.0, static_cast<int>(degree()));
}

u64 CyclotomicPoly::eval_mod(u64 x, u64 p) const {
  u64 acc = 0;
  x %= p;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    const i64 a = *it % static_cast<i64>(p);
    const u64 ar = static_cast<u64>(a < 0 ? a + static_cast<i64>(p) : a);
    acc = (mulmod(acc, x, p) + ar) % p;
  }
  return acc;
}

namespace {

using Poly = std::vector<i64>;

/// Exact quotient num / den for monic den.
Poly divide_exact(const Poly& num, const Poly& den) {
  Poly rem = num;
  const std::size_t dn = den.size() - 1;
  Poly quot(num.size() - dn, 0);
  for (std::size_t i = quot.size(); i-- > 0;) {
    const i64 c = rem[i + dn];
    quot[i] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) rem[i + j] -= c * den[j];
  }
  return quot;
}

Poly cyclotomic_rec(u64 d, std::map<u64, Poly>& memo) {
  if (auto it = memo.find(d); it != memo.end()) return it->second;
  Poly p(d + 1, 0);
  p[0] = -1;
  p[d] = 1;
  for (u64 e : divisors(d)) {
    if (e == d) continue;
    p = divide_exact(p, cyclotomic_rec(e, memo));
  }
  memo[d] = p;
  return p;
}

}  // namespace

CyclotomicPoly cyclotomic_poly(u64 d) {
  if (d == 0 || euler_phi(d) > 64) {
    throw Error(Errc::OutOfRange, "cyclotomic index " + std::to_string(d) + " outside phi(d) <= 64");
  }
  std::map<u64, Poly> memo;
  return {d, cyclotomic_rec(d, memo)};
}

namespace {

SurveyEntry survey_prime(u64 p, u64 D, u64 R) {
  SurveyEntry entry{p, std::nullopt};
  if (p < 5 || D <= 3 || R <= 1) return entry;
  const u64 n = p - 1;
  const u64 g = smallest_primitive_root(p);
  for (u64 e = 3; e < D; ++e) {
    if (n % e != 0) continue;
    const u64 base = powmod(g, n / e, p);
    std::vector<u64> elems;
    for (u64 t = 1; t < e; ++t) {
      if (std::gcd(t, e) == 1) elems.push_back(powmod(base, t, p));
    }
    std::sort(elems.begin(), elems.end());
    for (u64 lambda : elems) {
      if (auto rec = rho_below(p, lambda, R)) {
        entry.witness = SurveyWitness{lambda, e, rec->rho, rec->r, rec->s};
        return entry;
      }
    }
  }
  return entry;
}

double count_envelope(u64 D, u64 R) {
  const double Dd = static_cast<double>(D);
  const double Rd = static_cast<double>(R);
  const double logR = std::log(Rd);
  return Dd * Dd * Rd * logR * logR / std::log(Dd);
}

}  // namespace

SurveyReport exceptional_set(u64 Qlo, u64 Qhi, u64 D, u64 R) {
  if (Qlo < 2 || Qlo > Qhi) throw Error(Errc::EmptyRange, "need 2 <= Qlo <= Qhi");
  if (D < 3) throw Error(Errc::OutOfRange, "D must be >= 3");
  if (R < 1) throw Error(Errc::OutOfRange, "R must be >= 1");
  SurveyReport rep;
  rep.Qlo = Qlo;
  rep.Qhi = Qhi;
  rep.D = D;
  rep.R = R;
  rep.bound_value = count_envelope(D, R);
  const auto primes = primes_in_range(Qlo, Qhi);
  rep.scanned = primes.size();
  rep.entries = parallel_map<SurveyEntry>(primes.size(), [&](std::size_t i) { return survey_prime(primes[i], D, R); });
  for (const auto& e : rep.entries) {
    if (e.witness) rep.exceptional.push_back(e.p);
  }
  return rep;
}

namespace {

double median(std::vector<double> v) {
  if (v.empty()) return 0.0;
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace

AlmostAllReport almost_all_experiment(u64 Q, u64 D, u64 R, unsigned k) {
  if (Q < 10) throw Error(Errc::OutOfRange, "Q must be >= 10");
  if (k == 0) throw Error(Errc::OutOfRange, "k must be >= 1");
  AlmostAllReport rep;
  rep.Q = Q;
  rep.D = D;
  rep.R = R;
  rep.k = k;
  rep.survey = exceptional_set(Q, 2 * Q, D, R);
  rep.main_term = ak_constant(k).value;

  std::vector<std::pair<u64, u64>> jobs;
  for (const auto& e : rep.survey.entries) {
    if (e.witness) continue;
    for (u64 d = 3; d <= D; d += 2) {
      if ((e.p - 1) % d == 0) jobs.emplace_back(e.p, d);
    }
  }
  rep.rows = parallel_map<AlmostAllRow>(jobs.size(), [&](std::size_t i) {
    const auto [p, d] = jobs[i];
    const auto ctx = build_prime_context(p);
    const auto all = moment_m2k(ctx, d, k, MomentFilter::All);
    const auto odd = moment_m2k(ctx, d, k, MomentFilter::OddOnly);
    return AlmostAllRow{p, d, all.m, all.value, odd.value, all.deviation, odd.deviation};
  });

  std::vector<double> dev_all, dev_odd;
  for (const auto& row : rep.rows) {
    dev_all.push_back(std::abs(row.deviation_all));
    dev_odd.push_back(std::abs(row.deviation_odd));
  }
  if (!dev_all.empty()) {
    rep.max_abs_deviation = *std::max_element(dev_all.begin(), dev_all.end());
    rep.max_abs_deviation_odd = *std::max_element(dev_odd.begin(), dev_odd.end());
  }
  rep.median_abs_deviation = median(dev_all);
  rep.median_abs_deviation_odd = median(dev_odd);
  return rep;
}

}  // namespace lfl
