#pragma once

// Farey fractions F_Q = { r/s : gcd(r, s) = 1, 1 <= r, s <= Q } and exact
// k-fold product sets.

#include <cstdint>
#include <vector>

#include "lfl/arith.hpp"

namespace lfl {

struct ReducedFraction {
  u64 num = 1;
  u64 den = 1;

  friend bool operator==(const ReducedFraction&, const ReducedFraction&) = default;
};

/// Strict order by rational value.
bool value_less(const ReducedFraction& a, const ReducedFraction& b) noexcept;

struct FractionSet {
  u64 Q = 0;  ///< Farey order when built by farey_set(), else 0
  std::vector<ReducedFraction> members;  ///< distinct, ascending by value

  std::size_t size() const noexcept { return members.size(); }
};

inline constexpr u64 kMaxFareyOrder = 4096;

/// Throws OutOfRange for Q < 1 or Q > kMaxFareyOrder.
FractionSet farey_set(u64 Q);

/// Limits for product-set enumeration.
struct ProductBudget {
  u64 max_value = u64{1} << 25;  ///< largest numerator / denominator before reduction
  u64 max_bits = u64{1} << 32;   ///< presence bitmap size
  u64 max_pairs = 20'000'000'000ULL;
};

/// A^(k) = { a_1 ... a_k : a_i in A } built as A^(k-1) * A with exact integer
/// arithmetic; each stage is deduplicated in a presence bitmap over the
/// possible numerators x denominators. Throws OutOfRange (k = 0, empty A),
/// BudgetExceeded.
FractionSet product_set(const FractionSet& A, unsigned k, const ProductBudget& budget = {});

/// Same enumeration, returning only #A^(k).
u64 product_set_size(const FractionSet& A, unsigned k, const ProductBudget& budget = {});

/// Deterministic subset of round(fraction * |A|) members (at least one),
/// chosen by a partial Fisher-Yates shuffle driven by mt19937_64(seed).
FractionSet seeded_subset(const FractionSet& A, double fraction, u64 seed);

struct GrowthReport {
  u64 Q = 0;
  unsigned k = 0;
  double subset_fraction = 1.0;
  u64 seed = 0;
  u64 set_size = 0;      ///< #A
  u64 product_size = 0;  ///< #A^(k)
  /// log(#A^k / #A^(k)) * log log Q / (k log Q)
  double c_obs = 0.0;
};

/// Throws OutOfRange (Q < 16, fraction outside (0, 1]), BudgetExceeded.
GrowthReport growth_report(u64 Q, unsigned k, double subset_fraction, u64 seed = 0,
                           const ProductBudget& budget = {});

}  // namespace lfl
