#include "lfl/farey.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "lfl/error.hpp"
#include "lfl/parallel.hpp"

namespace lfl {

bool value_less(const ReducedFraction& a, const ReducedFraction& b) noexcept {
  using u128 = unsigned __int128;
  return static_cast<u128>(a.num) * b.den < static_cast<u128>(b.num) * a.den;
}

FractionSet farey_set(u64 Q) {
  if (Q < 1 || Q > kMaxFareyOrder) {
    throw Error(Errc::OutOfRange, "Farey order " + std::to_string(Q) + " outside [1, " +
                                      std::to_string(kMaxFareyOrder) + "]");
  }
  FractionSet out;
  out.Q = Q;
  for (u64 s = 1; s <= Q; ++s) {
    for (u64 r = 1; r <= Q; ++r) {
      if (std::gcd(r, s) == 1) out.members.push_back({r, s});
    }
  }
  std::sort(out.members.begin(), out.members.end(), value_less);
  return out;
}

namespace {

class Bitmap {
 public:
  explicit Bitmap(u64 bits) : words_((bits + 63) / 64, 0) {}

  void set(u64 i, bool shared) {
    const u64 mask = u64{1} << (i & 63U);
    if (shared) {
      std::atomic_ref<u64>(words_[i >> 6]).fetch_or(mask, std::memory_order_relaxed);
    } else {
      words_[i >> 6] |= mask;
    }
  }

  u64 count() const {
    u64 c = 0;
    for (u64 w : words_) c += static_cast<u64>(std::popcount(w));
    return c;
  }

  /// Calls fn(i) for every set bit in ascending order, within word range.
  template <class Fn>
  void for_each_in_words(u64 first_word, u64 last_word, Fn&& fn) const {
    for (u64 wi = first_word; wi < last_word; ++wi) {
      u64 w = words_[wi];
      while (w != 0) {
        fn(wi * 64 + static_cast<u64>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  u64 words() const noexcept { return words_.size(); }

 private:
  std::vector<u64> words_;
};

/// A dense index over a set of values drawn from [0, limit].
struct ValueIndex {
  std::vector<std::uint32_t> index;  // value -> position (valid where present)
  std::vector<u64> values;           // position -> value, ascending

  static ValueIndex from_flags(const std::vector<char>& present) {
    ValueIndex vi;
    vi.index.assign(present.size(), 0);
    for (u64 v = 0; v < present.size(); ++v) {
      if (!present[v]) continue;
      vi.index[v] = static_cast<std::uint32_t>(vi.values.size());
      vi.values.push_back(v);
    }
    return vi;
  }
};

u64 checked_product(u64 a, u64 b, u64 limit) {
  const auto prod = static_cast<unsigned __int128>(a) * b;
  if (prod > limit) {
    throw Error(Errc::BudgetExceeded, "product terms exceed value budget " + std::to_string(limit));
  }
  return static_cast<u64>(prod);
}

std::vector<char> product_flags(const std::vector<u64>& xs, const std::vector<u64>& ys, u64 max_value) {
  const u64 top = checked_product(xs.back(), ys.back(), max_value);
  std::vector<char> flags(top + 1, 0);
  for (u64 x : xs) {
    for (u64 y : ys) flags[x * y] = 1;
  }
  return flags;
}

/// Marks every divisor of a flagged value.
std::vector<char> divisor_closure(const std::vector<char>& flags) {
  const u64 top = flags.size() - 1;
  std::vector<char> closed(flags.size(), 0);
  for (u64 e = 1; e <= top; ++e) {
    for (u64 v = e; v <= top; v += e) {
      if (flags[v]) {
        closed[e] = 1;
        break;
      }
    }
  }
  return closed;
}

std::vector<u64> distinct_sorted(std::vector<u64> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

struct StageOutput {
  ValueIndex num;
  ValueIndex den;
  Bitmap reduced{0};
};

/// Presence bitmap of { c * b : c in cur, b in base } as reduced fractions.
StageOutput multiply_stage(const std::vector<ReducedFraction>& cur, const std::vector<ReducedFraction>& base,
                           const ProductBudget& budget) {
  if (static_cast<unsigned __int128>(cur.size()) * base.size() > budget.max_pairs) {
    throw Error(Errc::BudgetExceeded, "product stage exceeds pair budget");
  }
  std::vector<u64> cn, cd, bn, bd;
  for (const auto& f : cur) {
    cn.push_back(f.num);
    cd.push_back(f.den);
  }
  for (const auto& f : base) {
    bn.push_back(f.num);
    bd.push_back(f.den);
  }
  cn = distinct_sorted(std::move(cn));
  cd = distinct_sorted(std::move(cd));
  bn = distinct_sorted(std::move(bn));
  bd = distinct_sorted(std::move(bd));

  const auto num_flags = product_flags(cn, bn, budget.max_value);
  const auto den_flags = product_flags(cd, bd, budget.max_value);
  const auto raw_num = ValueIndex::from_flags(num_flags);
  const auto raw_den = ValueIndex::from_flags(den_flags);

  auto check_bits = [&](u64 rows, u64 cols) {
    if (static_cast<unsigned __int128>(rows) * cols > budget.max_bits) {
      throw Error(Errc::BudgetExceeded, "presence bitmap exceeds bit budget");
    }
    return rows * cols;
  };
  const u64 raw_cols = raw_den.values.size();
  Bitmap raw(check_bits(raw_num.values.size(), raw_cols));

  const bool shared = thread_count() > 1;
  parallel_for(cur.size(), [&](std::size_t i) {
    const auto& c = cur[i];
    for (const auto& b : base) {
      const u64 row = raw_num.index[c.num * b.num];
      const u64 col = raw_den.index[c.den * b.den];
      raw.set(row * raw_cols + col, shared);
    }
  });

  StageOutput out;
  out.num = ValueIndex::from_flags(divisor_closure(num_flags));
  out.den = ValueIndex::from_flags(divisor_closure(den_flags));
  const u64 cols = out.den.values.size();
  out.reduced = Bitmap(check_bits(out.num.values.size(), cols));

  const u64 words = raw.words();
  const u64 chunks = std::max<u64>(1, std::min<u64>(words, 256));
  parallel_for(chunks, [&](std::size_t c) {
    raw.for_each_in_words(words * c / chunks, words * (c + 1) / chunks, [&](u64 bit) {
      const u64 x = raw_num.values[bit / raw_cols];
      const u64 y = raw_den.values[bit % raw_cols];
      const u64 g = std::gcd(x, y);
      out.reduced.set(static_cast<u64>(out.num.index[x / g]) * cols + out.den.index[y / g], shared);
    });
  });
  return out;
}

std::vector<ReducedFraction> materialize(const StageOutput& st) {
  std::vector<ReducedFraction> out;
  out.reserve(st.reduced.count());
  const u64 cols = st.den.values.size();
  st.reduced.for_each_in_words(0, st.reduced.words(), [&](u64 bit) {
    out.push_back({st.num.values[bit / cols], st.den.values[bit % cols]});
  });
  return out;
}

void check_product_args(const FractionSet& A, unsigned k) {
  if (k == 0) throw Error(Errc::OutOfRange, "k must be >= 1");
  if (A.members.empty()) throw Error(Errc::OutOfRange, "empty fraction set");
}

}  // namespace

FractionSet product_set(const FractionSet& A, unsigned k, const ProductBudget& budget) {
  check_product_args(A, k);
  FractionSet out;
  out.members = A.members;
  for (unsigned stage = 2; stage <= k; ++stage) {
    out.members = materialize(multiply_stage(out.members, A.members, budget));
  }
  std::sort(out.members.begin(), out.members.end(), value_less);
  return out;
}

u64 product_set_size(const FractionSet& A, unsigned k, const ProductBudget& budget) {
  check_product_args(A, k);
  if (k == 1) return A.size();
  std::vector<ReducedFraction> cur = A.members;
  for (unsigned stage = 2; stage < k; ++stage) cur = materialize(multiply_stage(cur, A.members, budget));
  return multiply_stage(cur, A.members, budget).reduced.count();
}

FractionSet seeded_subset(const FractionSet& A, double fraction, u64 seed) {
  if (!(fraction > 0.0 && fraction <= 1.0)) throw Error(Errc::OutOfRange, "subset fraction must lie in (0, 1]");
  if (A.members.empty()) throw Error(Errc::OutOfRange, "empty fraction set");
  const u64 n = A.size();
  const u64 want = std::clamp<u64>(static_cast<u64>(std::llround(fraction * static_cast<double>(n))), 1, n);
  std::vector<u64> order(n);
  std::iota(order.begin(), order.end(), u64{0});
  // Explicit Fisher-Yates: std::shuffle's sequence is implementation-defined.
  std::mt19937_64 rng(seed);
  for (u64 i = 0; i < want; ++i) {
    const u64 j = i + rng() % (n - i);
    std::swap(order[i], order[j]);
  }
  order.resize(want);
  std::sort(order.begin(), order.end());
  FractionSet out;
  for (u64 idx : order) out.members.push_back(A.members[idx]);
  return out;
}

GrowthReport growth_report(u64 Q, unsigned k, double subset_fraction, u64 seed, const ProductBudget& budget) {
  if (Q < 16) throw Error(Errc::OutOfRange, "growth report needs Q >= 16");
  if (!(subset_fraction > 0.0 && subset_fraction <= 1.0)) {
    throw Error(Errc::OutOfRange, "subset fraction must lie in (0, 1]");
  }
  const FractionSet full = farey_set(Q);
  const FractionSet A = subset_fraction == 1.0 ? full : seeded_subset(full, subset_fraction, seed);
  GrowthReport rep;
  rep.Q = Q;
  rep.k = k;
  rep.subset_fraction = subset_fraction;
  rep.seed = seed;
  rep.set_size = A.size();
  rep.product_size = product_set_size(A, k, budget);
  const double logQ = std::log(static_cast<double>(Q));
  const double log_ratio =
      k * std::log(static_cast<double>(rep.set_size)) - std::log(static_cast<double>(rep.product_size));
  rep.c_obs = log_ratio * std::log(logQ) / (k * logQ);
  return rep;
}

}  // namespace lfl
