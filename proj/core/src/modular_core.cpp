#include "lfl/modular_core.hpp"

#include <algorithm>
#include <fstream>
#include <string>

#include <json.hpp>

#include "lfl/error.hpp"

namespace lfl {

namespace {

void check_prime(u64 p, u64 max_p) {
  if (!is_prime(p)) throw Error(Errc::NotPrime, "p = " + std::to_string(p));
  if (p < 3 || p > max_p) {
    throw Error(Errc::OutOfRange,
                "p = " + std::to_string(p) + " outside [3, " + std::to_string(max_p) + "]");
  }
}

}  // namespace

PrimeContext build_prime_context_with_root(u64 p, u64 g, u64 max_p) {
  check_prime(p, max_p);
  if (g == 0 || g >= p) throw Error(Errc::OutOfRange, "primitive root out of range");
  for (u64 q : prime_factors(p - 1)) {
    if (powmod(g, (p - 1) / q, p) == 1) {
      throw Error(Errc::OutOfRange, std::to_string(g) + " is not a primitive root mod " + std::to_string(p));
    }
  }
  auto t = std::make_shared<PrimeContext::Tables>();
  t->p = p;
  t->g = g;
  t->dlog.assign(p, 0);
  t->power.resize(p - 1);
  u64 x = 1;
  for (u64 e = 0; e + 1 < p; ++e) {
    t->power[e] = static_cast<std::uint32_t>(x);
    t->dlog[x] = static_cast<std::uint32_t>(e);
    x = x * g % p;
  }
  return PrimeContext(std::move(t));
}

PrimeContext build_prime_context(u64 p, u64 max_p) {
  check_prime(p, max_p);
  return build_prime_context_with_root(p, smallest_primitive_root(p), max_p);
}

u64 PrimeContext::dlog(u64 x) const {
  x %= tables_->p;
  if (x == 0) throw Error(Errc::ZeroResidue, "residue divisible by p");
  return tables_->dlog[x];
}

u64 dlog(const PrimeContext& ctx, u64 x) { return ctx.dlog(x); }

SubgroupFamily subgroup(const PrimeContext& ctx, u64 d) {
  const u64 n = ctx.order();
  if (d == 0 || n % d != 0) {
    throw Error(Errc::NotADivisor, std::to_string(d) + " does not divide " + std::to_string(n));
  }
  const u64 m = n / d;
  std::vector<u64> elems;
  elems.reserve(d);
  for (u64 t = 0; t < d; ++t) elems.push_back(ctx.pow_g(m * t));
  std::sort(elems.begin(), elems.end());
  return SubgroupFamily(ctx, d, m, std::move(elems));
}

void save_context_cache(const std::filesystem::path& path, const PrimeContext& ctx) {
  nlohmann::json j{{"p", ctx.p()}, {"g", ctx.g()}};
  std::ofstream out(path);
  out << j.dump() << '\n';
}

PrimeContext load_context_cache(const std::filesystem::path& path, u64 max_p) {
  std::ifstream in(path);
  const auto j = nlohmann::json::parse(in);
  return build_prime_context_with_root(j.at("p").get<u64>(), j.at("g").get<u64>(), max_p);
}

}  // namespace lfl
