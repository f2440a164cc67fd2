#pragma once

// Prime-field substrate: a prime p, its smallest primitive root g, and the
// discrete-log table x -> t with g^t = x (mod p). Everything character-valued
// in the library is evaluated through these tables.

#include <cstdint>
#include <filesystem>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "lfl/arith.hpp"

namespace lfl {

/// Largest prime for which full tables are built (4 bytes per residue, twice).
inline constexpr u64 kMaxTablePrime = 50'000'000;

class PrimeContext {
 public:
  u64 p() const noexcept { return tables_->p; }
  u64 g() const noexcept { return tables_->g; }
  u64 order() const noexcept { return tables_->p - 1; }

  /// t in [0, p-2] with g^t = x (mod p); x is reduced mod p first.
  u64 dlog(u64 x) const;

  /// g^t mod p for any t (reduced mod p - 1).
  u64 pow_g(u64 t) const noexcept { return tables_->power[t % (tables_->p - 1)]; }

  /// Index x in [1, p-1]; entry 0 is unused.
  std::span<const std::uint32_t> dlog_table() const noexcept { return tables_->dlog; }
  /// Index t in [0, p-2].
  std::span<const std::uint32_t> power_table() const noexcept { return tables_->power; }

  friend PrimeContext build_prime_context(u64 p, u64 max_p);
  friend PrimeContext build_prime_context_with_root(u64 p, u64 g, u64 max_p);

 private:
  struct Tables {
    u64 p = 0;
    u64 g = 0;
    std::vector<std::uint32_t> dlog;
    std::vector<std::uint32_t> power;
  };
  explicit PrimeContext(std::shared_ptr<const Tables> t) : tables_(std::move(t)) {}
  std::shared_ptr<const Tables> tables_;
};

/// Throws NotPrime (p composite or p < 3) or OutOfRange (p > max_p).
PrimeContext build_prime_context(u64 p, u64 max_p = kMaxTablePrime);

/// Same, with a caller-supplied primitive root (validated).
PrimeContext build_prime_context_with_root(u64 p, u64 g, u64 max_p = kMaxTablePrime);

/// Throws ZeroResidue when p | x.
u64 dlog(const PrimeContext& ctx, u64 x);

/// The subgroup G_m of F_p^* of order d, index m = (p-1)/d.
class SubgroupFamily {
 public:
  u64 p() const noexcept { return ctx_.p(); }
  u64 d() const noexcept { return d_; }
  u64 m() const noexcept { return m_; }
  const std::vector<u64>& elements() const& noexcept { return elements_; }
  std::vector<u64> elements() && { return std::move(elements_); }

  /// Indicator xi_m(x); false for x = 0 mod p.
  bool contains(u64 x) const noexcept {
    x %= ctx_.p();
    return x != 0 && ctx_.dlog_table()[x] % m_ == 0;
  }

  friend SubgroupFamily subgroup(const PrimeContext& ctx, u64 d);

 private:
  SubgroupFamily(PrimeContext ctx, u64 d, u64 m, std::vector<u64> elems)
      : ctx_(std::move(ctx)), d_(d), m_(m), elements_(std::move(elems)) {}
  PrimeContext ctx_;
  u64 d_;
  u64 m_;
  std::vector<u64> elements_;
};

/// Throws NotADivisor unless d >= 1 and d | p - 1.
SubgroupFamily subgroup(const PrimeContext& ctx, u64 d);

/// Cache file holding {"p": ..., "g": ...}; tables are rebuilt on load.
void save_context_cache(const std::filesystem::path& path, const PrimeContext& ctx);
PrimeContext load_context_cache(const std::filesystem::path& path, u64 max_p = kMaxTablePrime);

}  // namespace lfl
