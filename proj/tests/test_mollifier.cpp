#include <numbers>

#include <gtest/gtest.h>

#include "lfl/arith.hpp"
#include "lfl/characters.hpp"
#include "lfl/error.hpp"
#include "lfl/lvalues.hpp"
#include "lfl/modular_core.hpp"
#include "lfl/mollifier.hpp"
#include "lfl/moments.hpp"
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

int mobius(u64 n) {
  int mu = 1;
  for (u64 q = 2; q * q <= n; ++q) {
    if (n % q) continue;
    n /= q;
    if (n % q == 0) return 0;
    mu = -mu;
  }
  return n > 1 ? -mu : mu;
}

}  // namespace

TEST(Coeffs, Examples) {
  EXPECT_EQ(mollifier_coeffs(1), (std::vector<double>{1.0}));
  const auto c2 = mollifier_coeffs(2);
  EXPECT_EQ(c2[0], 1.0);
  EXPECT_NEAR(c2[1], 0.0, 1e-15);
  const auto c10 = mollifier_coeffs(10);
  EXPECT_NEAR(c10[2], -(1.0 - std::log(3.0) / std::log(10.0)), 1e-15);
  EXPECT_NEAR(c10[2], -0.52288, 1e-5);
  EXPECT_THROW(mollifier_coeffs(0), Error);
}

TEST(Coeffs, FormulaAndBounded) {
  for (u64 H : {3ULL, 50ULL, 500ULL}) {
    const auto c = mollifier_coeffs(H);
    ASSERT_EQ(c.size(), H);
    for (u64 h = 2; h <= H; ++h) {
      ASSERT_NEAR(c[h - 1], mobius(h) * (1.0 - std::log(double(h)) / std::log(double(H))), 1e-14);
      ASSERT_LE(std::abs(c[h - 1]), 1.0);
    }
  }
}

TEST(Twisted, UnitTwistChainsToSecondMoment) {
  for (u64 p : {7ULL, 13ULL, 1009ULL, 1999ULL}) {
    const auto ctx = build_prime_context(p);
    for (u64 d : divisors(p - 1)) {
      if (d % 2 == 0) continue;
      const double m = static_cast<double>((p - 1) / d);
      const auto t = twisted_moments(ctx, d, 1, 1);
      ASSERT_NEAR(t.B, m / 2.0 * second_moment_half(ctx, d).value, 1e-9 * std::max(1.0, t.B));
      ASSERT_EQ(t.A_main, m / 2.0);
      ASSERT_NEAR(t.B_imag, 0.0, 1e-9);
    }
  }
}

TEST(Twisted, ThirteenDirectSum) {
  const u64 p = 13;
  const auto ctx = build_prime_context(p);
  const oracle::Chars oc(p, 2);
  for (auto [h, k] : {std::pair<u64, u64>{2, 1}, {1, 3}, {5, 2}}) {
    cplx A = 0.0, B = 0.0;
    for (u64 j = 0; j < 12; j += 3) {
      if (j % 2) continue;
      const cplx L = oracle::l_half(oc, j, 50000);
      A += oc(j, h) * L;
      B += oc(j, h) * std::conj(oc(j, k)) * std::norm(L);
    }
    const auto t = twisted_moments(ctx, 3, h, k);
    EXPECT_LT(std::abs(t.A - A), 1e-8);
    EXPECT_NEAR(t.B, B.real(), 1e-8);
    EXPECT_EQ(t.A_main, h == 1 ? 2.0 : 0.0);
    const double L2 = std::log(13.0 / std::numbers::pi) + oracle::digamma(0.25) + 2 * oracle::kGamma;
    EXPECT_NEAR(t.B_main, 4.0 * 12.0 / (2.0 * 13.0 * std::sqrt(double(h * k))) * (L2 - std::log(double(h * k))),
                1e-10);
  }
}

TEST(Twisted, Errors) {
  const auto ctx = build_prime_context(13);
  EXPECT_EQ(code_of([&] { twisted_moments(ctx, 3, 13, 1); }), Errc::SharedFactorWithP);
  EXPECT_EQ(code_of([&] { twisted_moments(ctx, 3, 1, 26); }), Errc::SharedFactorWithP);
  EXPECT_EQ(code_of([&] { twisted_moments(ctx, 3, 2, 4); }), Errc::NonCoprimePair);
  EXPECT_EQ(code_of([&] { twisted_moments(ctx, 5, 1, 1); }), Errc::NotADivisor);
}

TEST(Mollified, ThirteenBruteForce) {
  const u64 p = 13;
  const auto ctx = build_prime_context(p);
  const oracle::Chars oc(p, 2);
  const u64 H = 3;
  double C = 0.0, D = 0.0;
  for (u64 j = 0; j < 12; j += 3) {
    if (j % 2) continue;
    cplx M = 0.0;
    for (u64 h = 1; h <= H; ++h) {
      const double x = h == 1 ? 1.0 : mobius(h) * (1.0 - std::log(double(h)) / std::log(double(H)));
      M += x * oc(j, h) / std::sqrt(double(h));
    }
    const cplx ML = M * oracle::l_half(oc, j, 50000);
    C += ML.real();
    D += std::norm(ML);
  }
  const auto mm = mollified_moments(ctx, 3, H);
  EXPECT_NEAR(mm.C, C, 1e-8);
  EXPECT_NEAR(mm.D, D, 1e-8);
  EXPECT_EQ(mm.character_count, 2u);
}

TEST(Mollified, LengthOneReproducesTwisted) {
  for (u64 p : {61ULL, 1009ULL}) {
    const auto ctx = build_prime_context(p);
    const auto mm = mollified_moments(ctx, 3, 1);
    const auto t = twisted_moments(ctx, 3, 1, 1);
    EXPECT_EQ(mm.C, t.A.real());
    EXPECT_EQ(mm.D, t.B);
  }
}

TEST(Mollified, ImaginaryResidueVanishes) {
  for (u64 p : {103ULL, 409ULL, 1999ULL}) {
    const auto ctx = build_prime_context(p);
    for (u64 d : divisors(p - 1)) {
      if (d % 2 == 0) continue;
      for (u64 H : {1ULL, 10ULL, 50ULL}) {
        ASSERT_LE(std::abs(mollified_moments(ctx, d, H).C_imag), 1e-8);
      }
    }
  }
}

TEST(Mollified, Errors) {
  const auto ctx = build_prime_context(13);
  EXPECT_EQ(code_of([&] { mollified_moments(ctx, 3, 13); }), Errc::MollifierTooLong);
  EXPECT_EQ(code_of([&] { mollified_moments(ctx, 4, 2); }), Errc::EvenOrder);
  EXPECT_EQ(code_of([&] { mollified_moments(ctx, 5, 2); }), Errc::NotADivisor);
}

TEST(Nonvanishing, ThirteenExample) {
  const auto rep = nonvanishing_report(build_prime_context(13), 3, 1, 1e-8);
  EXPECT_LE(rep.count_nonzero, 2u);
  EXPECT_EQ(rep.character_count, 2u);
  EXPECT_GE(rep.count_nonzero + 1e-6, rep.lower_bound);
  EXPECT_EQ(rep.characters, (std::vector<u64>{0, 6}));
  EXPECT_TRUE(std::isinf(rep.predicted_D_shape));
  EXPECT_NEAR(rep.theta_ratio, std::log(3.0) / std::log(13.0), 1e-15);
}

TEST(Nonvanishing, DegenerateWithoutCharacters) {
  MollifierOptions opts;
  opts.exclude_principal = true;
  EXPECT_EQ(code_of([&] { nonvanishing_report(build_prime_context(7), 3, 1, 1e-8, opts); }), Errc::DegenerateD);
  EXPECT_EQ(code_of([&] { nonvanishing_report(build_prime_context(7), 3, 1, 0.0); }), Errc::OutOfRange);
}

TEST(Nonvanishing, CauchySchwarzSample) {
  for (u64 p : {103ULL, 307ULL, 1999ULL}) {
    const auto ctx = build_prime_context(p);
    for (u64 d : divisors(p - 1)) {
      if (d % 2 == 0) continue;
      for (u64 H : {1ULL, 10ULL, 50ULL}) {
        const auto rep = nonvanishing_report(ctx, d, H, 1e-8);
        ASSERT_GE(static_cast<double>(rep.count_nonzero), rep.lower_bound - 1e-6);
        ASSERT_LE(rep.count_nonzero, rep.character_count);
        if (H == 1) {
          ASSERT_TRUE(std::isinf(rep.predicted_D_shape));
        } else {
          ASSERT_NEAR(rep.predicted_D_shape, 1.0 + std::log(double(p)) / std::log(double(H)), 1e-12);
        }
      }
    }
  }
}
