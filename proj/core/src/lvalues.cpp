#include "lfl/lvalues.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <string>

#include <fftw3.h>

#include "lfl/error.hpp"
#include "lfl/special.hpp"

namespace lfl {

const char* to_string(LMethod m) noexcept {
  switch (m) {
    case LMethod::DigammaExact: return "digamma-exact";
    case LMethod::HurwitzExact: return "hurwitz-exact";
    case LMethod::SmoothedSeries: return "smoothed-series";
  }
  return "unknown";
}

namespace {

void require_nonprincipal(const PrimeContext& ctx, u64 j) {
  if (j % ctx.order() == 0) throw Error(Errc::PrincipalCharacter, "L(1, chi_0) has a pole");
}

/// sum_a chi_j(a) f(a) walking a = g^t so the phase is j t mod (p-1).
template <class Fn>
cplx residue_sum(const PrimeContext& ctx, u64 j, Fn&& f, double* abs_sum) {
  const u64 n = ctx.order();
  const auto power = ctx.power_table();
  j %= n;
  cplx acc{0.0, 0.0};
  double mass = 0.0;
  u64 phase = 0;
  for (u64 t = 0; t < n; ++t) {
    const double v = f(static_cast<u64>(power[t]));
    acc += v * unit_root(phase, n);
    mass += std::abs(v);
    phase += j;
    if (phase >= n) phase -= n;
  }
  if (abs_sum != nullptr) *abs_sum = mass;
  return acc;
}

std::mutex g_fftw_planner;

/// Folds f(g^t / p) into classes t mod m, ready for a length-m DFT.
template <class Fn>
std::vector<double> folded_values(const PrimeContext& ctx, u64 d, Fn&& f) {
  const u64 n = ctx.order();
  if (d == 0 || n % d != 0) {
    throw Error(Errc::NotADivisor, std::to_string(d) + " does not divide " + std::to_string(n));
  }
  const u64 m = n / d;
  const double p = static_cast<double>(ctx.p());
  const auto power = ctx.power_table();
  std::vector<double> folded(m, 0.0);
  for (u64 t = 0; t < n; ++t) folded[t % m] += f(static_cast<double>(power[t]) / p);
  return folded;
}

constexpr std::array<double, 6> kBernoulliOverFactorial = {
    1.0 / 12.0,       -1.0 / 720.0,     1.0 / 30240.0, -1.0 / 1209600.0,
    1.0 / 47900160.0, -691.0 / 1307674368000.0};

/// sum_{n >= 0} w(x0 + n h) for w(x) = e^(-x/Z)/x by Euler-Maclaurin;
/// accurate once x0 and Z are both much larger than h.
double smoothed_class_tail(double x0, double h, double Z) {
  const double e = std::exp(-x0 / Z);
  double total = expint_e1(x0 / Z) / h + 0.5 * e / x0;
  // w^(n)(x) = e^(-x/Z) sum_i C(n,i) (-1/Z)^(n-i) (-1)^i i! x^(-i-1)
  auto derivative = [&](int order) {
    double sum = 0.0;
    double binom = 1.0;
    double fact = 1.0;
    for (int i = 0; i <= order; ++i) {
      if (i > 0) {
        binom = binom * (order - i + 1) / i;
        fact *= i;
      }
      const double sign = (order % 2 == 0) ? 1.0 : -1.0;
      sum += sign * binom * fact * std::pow(Z, -(order - i)) * std::pow(x0, -(i + 1));
    }
    return e * sum;
  };
  double hpow = h;
  for (std::size_t j = 0; j < kBernoulliOverFactorial.size(); ++j) {
    total -= kBernoulliOverFactorial[j] * hpow * derivative(static_cast<int>(2 * j + 1));
    hpow *= h * h;
  }
  return total;
}

double smoothed_cutoff(unsigned k, double Z, double tol) {
  return std::ceil(Z * (std::log(1.0 / tol) + k * std::log(2.0 + std::log(Z))));
}

/// F(a) = sum_{n >= 0} w(a + n p) for a = 1..p-1 (index a).
std::vector<double> smoothed_class_sums(u64 p, double Z, double tol) {
  const double pd = static_cast<double>(p);
  constexpr double kSeparation = 16.0;
  const bool use_tail = Z >= kSeparation * pd;
  const double direct_limit = use_tail ? kSeparation * pd : smoothed_cutoff(1, Z, tol);
  std::vector<double> out(p, 0.0);
  for (u64 a = 1; a < p; ++a) {
    double x = static_cast<double>(a);
    double acc = 0.0;
    for (; x < direct_limit; x += pd) acc += std::exp(-x / Z) / x;
    if (use_tail) acc += smoothed_class_tail(x, pd, Z);
    out[a] = acc;
  }
  return out;
}

struct TauCache {
  std::mutex mu;
  std::map<unsigned, std::unique_ptr<std::vector<std::uint32_t>>> tables;
  // Superseded tables stay alive so earlier references remain valid.
  std::vector<std::unique_ptr<std::vector<std::uint32_t>>> retired;
};

TauCache& tau_cache() {
  static TauCache cache;
  return cache;
}

std::vector<std::uint32_t> sieve_tau_k(unsigned k, u64 n) {
  // Linear sieve: tau_k is multiplicative with tau_k(q^e) = C(e + k - 1, k - 1).
  std::vector<std::uint32_t> tau(n + 1, 0);
  if (n >= 1) tau[1] = 1;
  std::vector<std::uint8_t> spf_exp(n + 1, 0);
  std::vector<std::uint32_t> primes;
  auto binom = [k](unsigned e) {
    std::uint64_t c = 1;
    for (unsigned i = 1; i < k; ++i) c = c * (e + i) / i;
    return c;
  };
  for (u64 i = 2; i <= n; ++i) {
    if (spf_exp[i] == 0) {
      primes.push_back(static_cast<std::uint32_t>(i));
      spf_exp[i] = 1;
      tau[i] = k;
    }
    for (std::uint32_t q : primes) {
      const u64 iq = i * q;
      if (iq > n) break;
      if (i % q == 0) {
        const unsigned e = spf_exp[i];
        spf_exp[iq] = static_cast<std::uint8_t>(e + 1);
        tau[iq] = static_cast<std::uint32_t>(tau[i] / binom(e) * binom(e + 1));
        break;
      }
      spf_exp[iq] = 1;
      tau[iq] = tau[i] * k;
    }
  }
  return tau;
}

}  // namespace

const std::vector<std::uint32_t>& tau_k_table(unsigned k, u64 n) {
  auto& cache = tau_cache();
  std::lock_guard lock(cache.mu);
  auto it = cache.tables.find(k);
  if (it == cache.tables.end() || it->second->size() < n + 1) {
    auto table = std::make_unique<std::vector<std::uint32_t>>(sieve_tau_k(k, n));
    if (it != cache.tables.end()) cache.retired.push_back(std::move(it->second));
    cache.tables[k] = std::move(table);
    it = cache.tables.find(k);
  }
  return *it->second;
}

LValue l_one_exact(const PrimeContext& ctx, u64 j) {
  require_nonprincipal(ctx, j);
  const double p = static_cast<double>(ctx.p());
  double mass = 0.0;
  const cplx sum = residue_sum(ctx, j, [p](u64 a) { return digamma(static_cast<double>(a) / p); }, &mass);
  const double eps = std::numeric_limits<double>::epsilon();
  return {CharacterId{ctx.p(), j % ctx.order()}, 1.0, -sum / p, LMethod::DigammaExact,
          4.0 * eps * mass / p + 1e-12};
}

LValue l_half_exact(const PrimeContext& ctx, u64 j) {
  const double p = static_cast<double>(ctx.p());
  double mass = 0.0;
  const cplx sum =
      residue_sum(ctx, j, [p](u64 a) { return hurwitz_zeta(0.5, static_cast<double>(a) / p); }, &mass);
  const double eps = std::numeric_limits<double>::epsilon();
  const double scale = 1.0 / std::sqrt(p);
  return {CharacterId{ctx.p(), j % ctx.order()}, 0.5, sum * scale, LMethod::HurwitzExact,
          (4.0 * eps * mass + 1e-10) * scale};
}

cplx l_one_smoothed(const PrimeContext& ctx, u64 j, unsigned k, double Z, const SmoothingOptions& opts) {
  require_nonprincipal(ctx, j);
  const u64 p = ctx.p();
  const u64 n = ctx.order();
  j %= n;
  if (k == 0) throw Error(Errc::OutOfRange, "k must be >= 1");
  if (!(Z >= static_cast<double>(p))) throw Error(Errc::OutOfRange, "smoothing length Z must be >= p");
  if (opts.strict && 2 * j == n) {
    throw Error(Errc::OutOfRange, "quadratic character rejected in strict mode");
  }

  if (k == 1) {
    const auto classes = smoothed_class_sums(p, Z, opts.tail_tolerance);
    return residue_sum(ctx, j, [&](u64 a) { return classes[a]; }, nullptr);
  }

  const double cutoff = smoothed_cutoff(k, Z, opts.tail_tolerance);
  if (cutoff > static_cast<double>(opts.max_terms)) {
    throw Error(Errc::BudgetExceeded, "smoothed series needs " + std::to_string(cutoff) + " terms");
  }
  const auto r_max = static_cast<u64>(cutoff);
  const auto& tau = tau_k_table(k, r_max);
  std::vector<cplx> chi(p, cplx{0.0, 0.0});
  for (u64 a = 1; a < p; ++a) chi[a] = unit_root(mulmod(j, ctx.dlog(a), n), n);

  const double step = std::exp(-1.0 / Z);
  double weight = 1.0;
  cplx acc{0.0, 0.0};
  u64 residue = 0;
  for (u64 r = 1; r <= r_max; ++r) {
    if ((r & 1023U) == 0) {
      weight = std::exp(-static_cast<double>(r) / Z);
    } else {
      weight *= step;
    }
    if (++residue == p) residue = 0;
    if (residue == 0) continue;
    acc += chi[residue] * (static_cast<double>(tau[r]) * weight / static_cast<double>(r));
  }
  return acc;
}

std::vector<cplx> real_dft(const std::vector<double>& in) {
  const std::size_t n = in.size();
  std::vector<cplx> out(n);
  if (n == 0) return out;
  double* buf = fftw_alloc_real(n);
  fftw_complex* freq = fftw_alloc_complex(n / 2 + 1);
  fftw_plan plan;
  {
    std::lock_guard lock(g_fftw_planner);
    plan = fftw_plan_dft_r2c_1d(static_cast<int>(n), buf, freq, FFTW_ESTIMATE);
  }
  std::copy(in.begin(), in.end(), buf);
  fftw_execute(plan);
  // FFTW's forward transform uses e(-ut/n); conjugate for e(+ut/n).
  for (std::size_t u = 0; u <= n / 2; ++u) out[u] = cplx{freq[u][0], -freq[u][1]};
  for (std::size_t u = n / 2 + 1; u < n; ++u) out[u] = std::conj(out[n - u]);
  if (n % 2 == 0) out[n / 2] = cplx{out[n / 2].real(), 0.0};
  out[0] = cplx{out[0].real(), 0.0};
  {
    std::lock_guard lock(g_fftw_planner);
    fftw_destroy_plan(plan);
  }
  fftw_free(freq);
  fftw_free(buf);
  return out;
}

std::vector<cplx> l_one_over_group(const PrimeContext& ctx, u64 d) {
  const auto folded = folded_values(ctx, d, [](double x) { return digamma(x); });
  auto out = real_dft(folded);
  const double p = static_cast<double>(ctx.p());
  for (auto& v : out) v = -v / p;
  out[0] = cplx{std::numeric_limits<double>::quiet_NaN(), 0.0};
  return out;
}

std::vector<cplx> l_half_over_group(const PrimeContext& ctx, u64 d) {
  const auto folded = folded_values(ctx, d, [](double x) { return hurwitz_zeta(0.5, x); });
  auto out = real_dft(folded);
  const double scale = 1.0 / std::sqrt(static_cast<double>(ctx.p()));
  for (auto& v : out) v *= scale;
  return out;
}

}  // namespace lfl
