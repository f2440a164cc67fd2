#include <gtest/gtest.h>

#include "lfl/arith.hpp"
#include "lfl/congruence.hpp"
#include "lfl/error.hpp"
#include "lfl/modular_core.hpp"
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
  return Errc::EmptyRange;
}

void expect_witness(const CongruenceRecord& rec, u64 p) {
  EXPECT_EQ(rec.r * rec.s, rec.rho);
  EXPECT_EQ(rec.r % p, rec.lambda % p * (rec.s % p) % p);
}

}  // namespace

TEST(Rho, Examples) {
  const auto ctx = build_prime_context(7);
  auto r = rho(ctx, 1);
  EXPECT_EQ(r.rho, 1u);
  EXPECT_EQ(r.r, 1u);
  EXPECT_EQ(r.s, 1u);
  r = rho(ctx, 3);
  EXPECT_EQ(r.rho, 3u);
  EXPECT_EQ(r.r, 3u);
  EXPECT_EQ(r.s, 1u);
  r = rho(ctx, 6);
  EXPECT_EQ(r.rho, 6u);
  EXPECT_EQ(r.r * r.s, 6u);
  expect_witness(r, 7);
  EXPECT_EQ(code_of([&] { rho(ctx, 14); }), Errc::ZeroResidue);
}

TEST(RhoBruteforce, Examples) {
  const auto ctx = build_prime_context(7);
  EXPECT_EQ(rho_bruteforce(ctx, 3).rho, 3u);
  const auto r = rho_bruteforce(ctx, 4);
  EXPECT_EQ(r.rho, 2u);
  EXPECT_EQ(r.r, 1u);
  EXPECT_EQ(r.s, 2u);
  EXPECT_EQ(rho_bruteforce(build_prime_context(101), 1).rho, 1u);
}

TEST(Rho, ScanEqualsOracleAndSymmetric) {
  for (u64 p : oracle::primes_upto(200)) {
    if (p < 3) continue;
    const auto ctx = build_prime_context(p);
    for (u64 l = 1; l < p; ++l) {
      const auto fast = rho(ctx, l);
      ASSERT_EQ(fast.rho, oracle::rho(l, p)) << p << " " << l;
      ASSERT_EQ(fast.rho, rho(ctx, invmod(l, p)).rho);
      ASSERT_LE(fast.rho, p - 1);
      expect_witness(fast, p);
    }
  }
}

TEST(RhoBelow, EarlyExit) {
  const auto ctx = build_prime_context(1009);
  for (u64 l = 1; l < 1009; l += 13) {
    const u64 v = rho(ctx, l).rho;
    EXPECT_FALSE(rho_below(1009, l, v).has_value());
    const auto hit = rho_below(1009, l, v + 1);
    ASSERT_TRUE(hit.has_value());
    EXPECT_EQ(hit->rho, v);
  }
}

TEST(Theta, Examples) {
  auto t = theta(build_prime_context(7), 3);
  EXPECT_EQ(t.value, 2u);
  EXPECT_EQ(t.argmin, 2u);
  t = theta(build_prime_context(13), 3);
  EXPECT_EQ(t.value, 3u);
  EXPECT_EQ(t.argmin, 3u);
  EXPECT_EQ(code_of([] { theta(build_prime_context(7), 1); }), Errc::EmptySubgroupMin);
  EXPECT_EQ(code_of([] { theta(build_prime_context(7), 4); }), Errc::NotADivisor);
}

TEST(Theta, EqualsMinOverElements) {
  for (u64 p : {31ULL, 97ULL, 211ULL, 421ULL}) {
    const auto ctx = build_prime_context(p);
    for (u64 d : divisors(p - 1)) {
      if (d == 1) continue;
      u64 best = ~u64{0}, arg = 0;
      for (u64 l : subgroup(ctx, d).elements()) {
        if (l == 1) continue;
        const u64 v = oracle::rho(l, p);
        if (v < best) best = v, arg = l;
      }
      const auto t = theta(ctx, d);
      ASSERT_EQ(t.value, best);
      ASSERT_EQ(t.argmin, arg);
    }
  }
}

TEST(RAlpha, Examples) {
  EXPECT_NEAR(r_alpha(build_prime_context(7), 3, 0.5), std::sqrt(2.0), 1e-15);
  EXPECT_EQ(r_alpha(build_prime_context(7), 1, 0.7), 0.0);
  EXPECT_EQ(r_alpha(build_prime_context(101), 1, 2.0), 0.0);
  EXPECT_NEAR(r_alpha(build_prime_context(13), 3, 1.0), 2.0 / 3.0, 1e-15);
  EXPECT_EQ(code_of([] { r_alpha(build_prime_context(7), 3, 0.0); }), Errc::OutOfRange);
}

TEST(FareyMembership, Examples) {
  const auto ctx = build_prime_context(7);
  EXPECT_EQ(farey_membership_count(ctx, 3, 2), 3u);
  EXPECT_EQ(farey_membership_count(ctx, 3, 1), 1u);
  EXPECT_EQ(farey_membership_count(ctx, 3, 6), 3u);
  EXPECT_EQ(code_of([&] { farey_membership_count(ctx, 4, 2); }), Errc::NotADivisor);
}

TEST(FareyMembership, MatchesEnumeration) {
  const u64 p = 211;
  const auto ctx = build_prime_context(p);
  for (u64 d : divisors(p - 1)) {
    const auto G = subgroup(ctx, d);
    for (u64 ell : {1ULL, 2ULL, 5ULL, 14ULL, 15ULL}) {
      u64 count = 0;
      for (u64 l : G.elements()) {
        bool found = false;
        for (u64 r = 1; r <= ell && !found; ++r) {
          for (u64 s = 1; s <= ell && !found; ++s) {
            found = (r % p == l * s % p) || ((p - r) % p == l * s % p);
          }
        }
        count += found;
      }
      ASSERT_EQ(farey_membership_count(ctx, d, ell), count) << d << " " << ell;
    }
  }
}

TEST(Hyperbola, Examples) {
  const auto ctx = build_prime_context(7);
  EXPECT_EQ(hyperbola_count(ctx, 3, 2, 2).count, 0u);
  const auto h = hyperbola_count(ctx, 1, 1, 1);
  EXPECT_EQ(h.count, 0u);
  EXPECT_NEAR(h.envelope, 1.0 + 1.0 / 7.0, 1e-15);
  EXPECT_EQ(code_of([&] { hyperbola_count(ctx, 7, 1, 1); }), Errc::ZeroResidue);
}

TEST(Hyperbola, MatchesEnumerationAndBound) {
  const u64 p = 101;
  const auto ctx = build_prime_context(p);
  for (u64 l = 1; l < p; l += 9) {
    for (double z1 : {1.0, 3.5, 10.0, 40.0}) {
      for (double z2 : {1.0, 2.0, 17.0}) {
        u64 c = 0;
        for (u64 r = static_cast<u64>(std::floor(z1)) + 1; r <= 2 * z1; ++r) {
          for (u64 s = static_cast<u64>(std::floor(z2)) + 1; s <= 2 * z2; ++s) {
            c += std::gcd(r, s) == 1 && r % p == l * s % p;
          }
        }
        const auto h = hyperbola_count(ctx, l, z1, z2);
        ASSERT_EQ(h.count, c);
        if (2 * z2 - z2 < p) ASSERT_LE(h.count, static_cast<u64>(std::floor(z1)) + 1);
      }
    }
  }
}
