#include <gtest/gtest.h>

#include "lfl/arith.hpp"
#include "lfl/congruence.hpp"
#include "lfl/error.hpp"
#include "lfl/modular_core.hpp"
#include "lfl/moments.hpp"
#include "lfl/parallel.hpp"
#include "lfl/prime_survey.hpp"
#include "oracles.hpp"

using namespace lfl;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no lfl::Error thrown";
  return Errc::NotPrime;
}

using Poly = std::vector<long long>;

Poly multiply(const Poly& a, const Poly& b) {
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

// Exceptional primes by brute force: orders by powering, rho by double loop.
std::vector<u64> brute_exceptional(u64 lo, u64 hi, u64 D, u64 R) {
  std::vector<u64> out;
  for (u64 p : oracle::primes_upto(hi)) {
    if (p < lo) continue;
    bool hit = false;
    for (u64 l = 2; l < p && !hit; ++l) {
      const u64 e = oracle::order(l, p);
      hit = e >= 3 && e < D && oracle::rho(l, p) < R;
    }
    if (hit) out.push_back(p);
  }
  return out;
}

}  // namespace

TEST(Cyclotomic, Examples) {
  EXPECT_EQ(cyclotomic_poly(1).coeffs, (std::vector<i64>{-1, 1}));
  EXPECT_EQ(cyclotomic_poly(3).coeffs, (std::vector<i64>{1, 1, 1}));
  EXPECT_EQ(cyclotomic_poly(12).coeffs, (std::vector<i64>{1, 0, -1, 0, 1}));
  EXPECT_EQ(cyclotomic_poly(105).coeffs[7], -2);
}

TEST(Cyclotomic, ProductOverDivisorsIsXdMinusOne) {
  for (u64 d = 1; d <= 60; ++d) {
    Poly prod{1};
    for (u64 e : divisors(d)) {
      const auto c = cyclotomic_poly(e).coeffs;
      prod = multiply(prod, Poly(c.begin(), c.end()));
    }
    Poly expect(d + 1, 0);
    expect[0] = -1;
    expect[d] = 1;
    ASSERT_EQ(prod, expect) << d;
  }
}

TEST(Cyclotomic, DegreeAndNormBound) {
  for (u64 d = 1; d <= 400; ++d) {
    const u64 ph = oracle::phi(d);
    if (ph > 24) continue;
    const auto c = cyclotomic_poly(d);
    ASSERT_EQ(c.degree(), ph);
    ASSERT_EQ(c.coeffs.back(), 1);
    u64 l1 = 0;
    for (auto a : c.coeffs) l1 += static_cast<u64>(std::llabs(a));
    ASSERT_EQ(c.l1_norm(), l1);
    ASSERT_LE(static_cast<double>(l1), std::sqrt(ph + 1.0) * std::pow(2.0, double(ph))) << d;
  }
  EXPECT_EQ(code_of([] { cyclotomic_poly(0); }), Errc::OutOfRange);
  EXPECT_EQ(code_of([] { cyclotomic_poly(67 * 2); }), Errc::OutOfRange);
}

TEST(Cyclotomic, VanishesAtElementsOfExactOrder) {
  for (u64 p : {31ULL, 61ULL, 211ULL}) {
    for (u64 l = 2; l < p; ++l) {
      const u64 e = oracle::order(l, p);
      ASSERT_EQ(cyclotomic_poly(e).eval_mod(l, p), 0u);
    }
  }
}

TEST(Exceptional, SpecExample) {
  const auto rep = exceptional_set(3, 50, 4, 3);
  EXPECT_EQ(rep.exceptional, (std::vector<u64>{7}));
  EXPECT_EQ(rep.scanned, 14u);
  ASSERT_EQ(rep.entries.size(), 14u);
  const auto& w = *rep.entries[2].witness;
  EXPECT_EQ(rep.entries[2].p, 7u);
  EXPECT_TRUE(w.lambda == 2 || w.lambda == 4);
  EXPECT_EQ(w.order, 3u);
  EXPECT_EQ(w.rho, 2u);
  const double expect = 16.0 * 3.0 * std::pow(std::log(3.0), 2) / std::log(4.0);
  EXPECT_NEAR(rep.bound_value, expect, 1e-12);
}

TEST(Exceptional, TrivialCases) {
  EXPECT_TRUE(exceptional_set(3, 500, 10, 1).exceptional.empty());
  EXPECT_TRUE(exceptional_set(3, 500, 3, 100).exceptional.empty());
  EXPECT_EQ(code_of([] { exceptional_set(50, 3, 4, 3); }), Errc::EmptyRange);
  EXPECT_EQ(code_of([] { exceptional_set(1, 3, 4, 3); }), Errc::EmptyRange);
  EXPECT_EQ(code_of([] { exceptional_set(3, 50, 2, 3); }), Errc::OutOfRange);
}

TEST(Exceptional, MatchesBruteForce) {
  for (auto [D, R] : {std::pair<u64, u64>{4, 3}, {6, 5}, {8, 10}, {13, 20}}) {
    const auto rep = exceptional_set(3, 400, D, R);
    ASSERT_EQ(rep.exceptional, brute_exceptional(3, 400, D, R)) << D << " " << R;
    ASSERT_LE(rep.exceptional.size(), rep.scanned);
  }
}

TEST(Exceptional, WitnessesRevalidate) {
  const auto rep = exceptional_set(3, 2000, 12, 30);
  for (const auto& e : rep.entries) {
    if (!e.witness) continue;
    const auto& w = *e.witness;
    const auto ctx = build_prime_context(e.p);
    ASSERT_EQ(oracle::order(w.lambda, e.p), w.order);
    ASSERT_GE(w.order, 3u);
    ASSERT_LT(w.order, 12u);
    ASSERT_EQ(rho_bruteforce(ctx, w.lambda).rho, w.rho);
    ASSERT_LT(w.rho, 30u);
    ASSERT_EQ(w.r * w.s, w.rho);
    ASSERT_EQ(cyclotomic_poly(w.order).eval_mod(w.lambda, e.p), 0u);
  }
}

TEST(Exceptional, ChunkingInvariant) {
  const unsigned saved = thread_count();
  set_thread_count(1);
  const auto one = exceptional_set(3, 5000, 10, 20);
  set_thread_count(4);
  const auto four = exceptional_set(3, 5000, 10, 20);
  set_thread_count(saved);
  EXPECT_EQ(one.exceptional, four.exceptional);
  // Union of split ranges equals the whole range.
  auto a = exceptional_set(3, 2500, 10, 20).exceptional;
  const auto b = exceptional_set(2501, 5000, 10, 20).exceptional;
  a.insert(a.end(), b.begin(), b.end());
  EXPECT_EQ(a, one.exceptional);
}

TEST(AlmostAll, HundredExample) {
  const auto rep = almost_all_experiment(100, 4, 3, 1);
  EXPECT_EQ(rep.survey.Qlo, 100u);
  EXPECT_EQ(rep.survey.Qhi, 200u);
  EXPECT_LE(rep.survey.exceptional.size(), rep.survey.scanned);
  std::vector<u64> expected;
  for (u64 p : oracle::primes_upto(200)) {
    if (p < 100 || p % 3 != 1) continue;
    if (!std::binary_search(rep.survey.exceptional.begin(), rep.survey.exceptional.end(), p)) expected.push_back(p);
  }
  ASSERT_EQ(rep.rows.size(), expected.size());
  for (std::size_t i = 0; i < rep.rows.size(); ++i) {
    const auto& r = rep.rows[i];
    EXPECT_EQ(r.p, expected[i]);
    EXPECT_EQ(r.d, 3u);
    EXPECT_TRUE(std::isfinite(r.deviation_all));
    EXPECT_TRUE(std::isfinite(r.deviation_odd));
    const auto direct = moment_m2k(build_prime_context(r.p), 3, 1, MomentFilter::All);
    EXPECT_EQ(r.moment_all, direct.value);
  }
  EXPECT_TRUE(std::isfinite(rep.max_abs_deviation));
  EXPECT_TRUE(std::isfinite(rep.median_abs_deviation));
}

TEST(AlmostAll, Errors) { EXPECT_EQ(code_of([] { almost_all_experiment(9, 4, 3, 1); }), Errc::OutOfRange); }
