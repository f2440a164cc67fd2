#include "lfl_cli/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "lfl/arith.hpp"
#include "lfl/characters.hpp"
#include "lfl/error.hpp"
#include "lfl/modular_core.hpp"
#include "lfl/parallel.hpp"
#include "lfl/special.hpp"
#include "lfl_cli/report.hpp"

#ifndef LFL_VERSION
#define LFL_VERSION "0.0.0"
#endif

namespace lfl::io {

const char* version_string() noexcept { return LFL_VERSION; }

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string command;
  std::optional<u64> p, lambda, d, k, Q, Qlo, Qhi, D, R, H, ell, N, seed;
  std::optional<double> alpha, epsilon_nv, fraction, xmax;
  std::string filter = "all";
  std::string format = "json";
  std::string out;
  std::string cache;
  unsigned threads = 1;
  bool no_meta = false;
  bool verbose = false;
  bool exclude_principal = false;
};

struct Outcome {
  ordered_json result;
  std::optional<CsvTable> csv;
};

// Reads parameters for one command, recording the effective values in
// the order they are requested.
class Params {
 public:
  explicit Params(const Options& o) : o_(o) {}

  const Options& opts() const { return o_; }
  const ordered_json& json() const { return json_; }

  u64 need(const char* name, const std::optional<u64>& v) {
    if (!v) throw UsageError(std::string("missing --") + flag(name) + " for " + o_.command);
    json_[name] = *v;
    return *v;
  }
  u64 get(const char* name, const std::optional<u64>& v, u64 fallback) {
    json_[name] = v.value_or(fallback);
    return v.value_or(fallback);
  }
  double need(const char* name, const std::optional<double>& v) {
    if (!v) throw UsageError(std::string("missing --") + flag(name) + " for " + o_.command);
    json_[name] = number(*v);
    return *v;
  }
  double get(const char* name, const std::optional<double>& v, double fallback) {
    json_[name] = number(v.value_or(fallback));
    return v.value_or(fallback);
  }
  unsigned small(const char* name, const std::optional<u64>& v, std::optional<u64> fallback = {}) {
    if (!v && !fallback) throw UsageError(std::string("missing --") + flag(name) + " for " + o_.command);
    const u64 x = v ? need(name, v) : get(name, v, *fallback);
    if (x == 0 || x > 64) throw UsageError(std::string("OutOfRange: --") + flag(name) + " must be in [1, 64]");
    return static_cast<unsigned>(x);
  }
  u64 prime(const char* name, const std::optional<u64>& v) {
    const u64 p = need(name, v);
    if (!is_prime(p)) throw UsageError("NotPrime: " + std::to_string(p) + " is not prime");
    if (p < 3 || p > kMaxTablePrime) {
      throw UsageError("OutOfRange: p = " + std::to_string(p) + " outside [3, " + std::to_string(kMaxTablePrime) + "]");
    }
    return p;
  }
  void flagged(const char* name, bool v) { json_[name] = v; }
  void text(const char* name, const std::string& v) { json_[name] = v; }

 private:
  static std::string flag(const char* name) {
    std::string f = name;
    for (char& c : f) {
      if (c == '_') c = '-';
    }
    return f;
  }

  const Options& o_;
  ordered_json json_ = ordered_json::object();
};

// A command validates its parameters and returns the deferred computation.
using Job = std::function<Outcome()>;
using Handler = std::function<Job(Params&)>;

CsvTable vector_csv(std::vector<std::string> header, const std::vector<std::vector<double>>& cols) {
  CsvTable t{std::move(header), {}};
  const std::size_t n = cols.empty() ? 0 : cols.front().size();
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::string> row;
    for (const auto& c : cols) row.push_back(format_float(c[i]));
    t.rows.push_back(std::move(row));
  }
  return t;
}

Job cmd_rho(Params& a) {
  const u64 p = a.prime("p", a.opts().p);
  const u64 lambda = a.need("lambda", a.opts().lambda);
  return [=] {
    ordered_json r = to_json(rho(build_prime_context(p), lambda));
    return Outcome{r, flat_csv(r)};
  };
}

Job cmd_theta(Params& a) {
  const u64 p = a.prime("p", a.opts().p);
  const u64 d = a.need("d", a.opts().d);
  return [=] {
    const auto t = theta(build_prime_context(p), d);
    ordered_json r = {{"m", (p - 1) / d}};
    r.update(to_json(t));
    return Outcome{r, flat_csv(r)};
  };
}

Job cmd_ralpha(Params& a) {
  const u64 p = a.prime("p", a.opts().p);
  const u64 d = a.need("d", a.opts().d);
  const double alpha = a.need("alpha", a.opts().alpha);
  return [=] {
    ordered_json r = {{"value", number(r_alpha(build_prime_context(p), d, alpha))}};
    return Outcome{r, flat_csv(r)};
  };
}

Job cmd_orthocheck(Params& a) {
  const u64 p = a.prime("p", a.opts().p);
  const u64 d = a.need("d", a.opts().d);
  const u64 trials = a.get("N", a.opts().N, 200);
  const u64 seed = a.get("seed", a.opts().seed, 0);
  return [=] {
    const auto ctx = build_prime_context(p);
    std::mt19937_64 rng(seed);
    double worst = 0.0;
    for (u64 i = 0; i < trials; ++i) {
      const u64 r = 1 + rng() % (p - 1);
      const u64 s = 1 + rng() % (p - 1);
      const int par = static_cast<int>(rng() % 2);
      const auto c = orthogonality_sum(ctx, d, par, r, s);
      worst = std::max(worst, std::abs(c.sum - cplx(c.predicted, 0.0)));
    }
    ordered_json r = {{"m", (p - 1) / d}, {"triples", trials}, {"max_abs_error", number(worst)},
                      {"pass", worst <= 1e-9}};
    return Outcome{r, flat_csv(r)};
  };
}

Job cmd_moments(Params& a) {
  const u64 p = a.prime("p", a.opts().p);
  const u64 d = a.need("d", a.opts().d);
  const unsigned k = a.small("k", a.opts().k);
  const std::string f = a.opts().filter;
  a.text("filter", f);
  return [=] {
    const auto rep =
        moment_m2k(build_prime_context(p), d, k, f == "odd" ? MomentFilter::OddOnly : MomentFilter::All);
    return Outcome{to_json(rep), to_csv(rep)};
  };
}

Job cmd_second_moment(Params& a) {
  const u64 p = a.prime("p", a.opts().p);
  const u64 d = a.need("d", a.opts().d);
  return [=] {
    const auto rep = second_moment_half(build_prime_context(p), d);
    return Outcome{to_json(rep), to_csv(rep)};
  };
}

Job cmd_cdf(Params& a) {
  const u64 p = a.prime("p", a.opts().p);
  const u64 d = a.need("d", a.opts().d);
  const double xmax = a.get("xmax", a.opts().xmax, 3.0);
  const u64 points = a.get("N", a.opts().N, 31);
  if (points < 2 || points > 100000) throw UsageError("OutOfRange: --N must be in [2, 100000] for cdf");
  if (!(xmax > 0.0)) throw UsageError("OutOfRange: --xmax must be positive");
  return [=] {
    std::vector<double> xs(points);
    for (u64 i = 0; i < points; ++i) xs[i] = xmax * static_cast<double>(i) / static_cast<double>(points - 1);
    const auto F = empirical_cdf(build_prime_context(p), d, xs);
    ordered_json jx = ordered_json::array(), jf = ordered_json::array();
    for (u64 i = 0; i < points; ++i) {
      jx.push_back(number(xs[i]));
      jf.push_back(number(F[i]));
    }
    ordered_json r = {{"m", (p - 1) / d}, {"x", jx}, {"F", jf}};
    return Outcome{r, vector_csv({"x", "F"}, {xs, F})};
  };
}

Job cmd_mollify(Params& a) {
  const u64 p = a.prime("p", a.opts().p);
  const u64 d = a.need("d", a.opts().d);
  const u64 H = a.need("H", a.opts().H);
  const bool excl = a.opts().exclude_principal;
  a.flagged("exclude_principal", excl);
  return [=] {
    const auto ctx = build_prime_context(p);
    const auto mm = mollified_moments(ctx, d, H, {excl});
    const auto tw = twisted_moments(ctx, d, 1, 1);
    ordered_json r = {{"m", (p - 1) / d}};
    r.update(to_json(mm));
    r["lower_bound"] = number(mm.C * mm.C / mm.D);
    r["twisted_1_1"] = to_json(tw);
    return Outcome{r, flat_csv(r)};
  };
}

Job cmd_nonvanishing(Params& a) {
  const u64 p = a.prime("p", a.opts().p);
  const u64 d = a.need("d", a.opts().d);
  const u64 H = a.need("H", a.opts().H);
  const double eps = a.get("epsilon_nv", a.opts().epsilon_nv, 1e-8);
  const bool excl = a.opts().exclude_principal;
  a.flagged("exclude_principal", excl);
  return [=] {
    const auto rep = nonvanishing_report(build_prime_context(p), d, H, eps, {excl});
    return Outcome{to_json(rep), to_csv(rep)};
  };
}

Job cmd_farey(Params& a) {
  const u64 Q = a.need("Q", a.opts().Q);
  const unsigned k = a.small("k", a.opts().k, 1);
  std::optional<u64> p, d, ell;
  if (a.opts().ell) {
    p = a.prime("p", a.opts().p);
    d = a.need("d", a.opts().d);
    ell = a.need("ell", a.opts().ell);
  }
  return [=] {
    const auto F = farey_set(Q);
    u64 phi_sum = 0;
    for (u64 s = 1; s <= Q; ++s) phi_sum += euler_phi(s);
    ordered_json r = {{"size", F.size()}, {"formula", 2 * phi_sum - 1}, {"matches", F.size() == 2 * phi_sum - 1}};
    if (k >= 2) r["product_size"] = product_set_size(F, k);
    if (ell) r["membership_count"] = farey_membership_count(build_prime_context(*p), *d, *ell);
    return Outcome{r, flat_csv(r)};
  };
}

Job cmd_growth(Params& a) {
  const u64 Q = a.need("Q", a.opts().Q);
  const unsigned k = a.small("k", a.opts().k);
  const double fraction = a.get("fraction", a.opts().fraction, 1.0);
  const u64 seed = a.get("seed", a.opts().seed, 0);
  return [=] {
    const auto rep = growth_report(Q, k, fraction, seed);
    return Outcome{to_json(rep), to_csv(rep)};
  };
}

Job cmd_exceptional(Params& a) {
  u64 lo = 0, hi = 0;
  if (a.opts().Qlo || a.opts().Qhi) {
    lo = a.need("Qlo", a.opts().Qlo);
    hi = a.need("Qhi", a.opts().Qhi);
  } else {
    lo = a.need("Q", a.opts().Q);
    hi = 2 * lo;
  }
  const u64 D = a.need("D", a.opts().D);
  const u64 R = a.need("R", a.opts().R);
  return [=] {
    const auto rep = exceptional_set(lo, hi, D, R);
    return Outcome{to_json(rep), to_csv(rep)};
  };
}

Job cmd_almost_all(Params& a) {
  const u64 Q = a.need("Q", a.opts().Q);
  const u64 D = a.need("D", a.opts().D);
  const u64 R = a.need("R", a.opts().R);
  const unsigned k = a.small("k", a.opts().k, 1);
  return [=] {
    const auto rep = almost_all_experiment(Q, D, R, k);
    return Outcome{to_json(rep), to_csv(rep)};
  };
}

Job cmd_oracle_check(Params& a) {
  const u64 N = a.get("N", a.opts().N, kAkCutoff);
  return [=] {
    using std::numbers::pi;
    struct Check {
      std::string name;
      double value, expected, tolerance;
    };
    std::vector<Check> checks;
    const auto ctx7 = build_prime_context(7);
    const auto ctx3 = build_prime_context(3);
    checks.push_back({"L1_legendre_7", l_one_exact(ctx7, 3).value.real(), pi / std::sqrt(7.0), 1e-9});
    checks.push_back({"L1_quadratic_3", l_one_exact(ctx3, 1).value.real(), 2.0 * pi / (6.0 * std::sqrt(3.0)), 1e-9});
    checks.push_back({"digamma_quarter", digamma(0.25), -kEulerGamma - pi / 2.0 - 3.0 * std::log(2.0), 1e-10});
    checks.push_back({"a1", ak_constant(1, N).value, pi * pi / 6.0, 1e-4});
    const double z2 = pi * pi / 6.0, z4 = std::pow(pi, 4) / 90.0;
    checks.push_back({"a2", ak_constant(2, N).value, z2 * z2 * z2 * z2 / z4, 1e-3});
    checks.push_back({"M2_odd_7_2", moment_m2k(ctx7, 3, 1, MomentFilter::OddOnly).value, pi * pi / 7.0, 1e-9});
    const double zh = hurwitz_zeta(0.5, 1.0) * (1.0 - 1.0 / std::sqrt(7.0));
    checks.push_back({"second_moment_7_2", second_moment_half(ctx7, 3).value, zh * zh, 1e-7});

    ordered_json list = ordered_json::array();
    CsvTable t{{"name", "value", "expected", "abs_error", "tolerance", "pass"}, {}};
    bool all = true;
    for (const auto& c : checks) {
      const double e = std::abs(c.value - c.expected);
      const bool ok = e <= c.tolerance;
      all = all && ok;
      list.push_back({{"name", c.name},
                      {"value", number(c.value)},
                      {"expected", number(c.expected)},
                      {"abs_error", number(e)},
                      {"tolerance", number(c.tolerance)},
                      {"pass", ok}});
      t.rows.push_back({c.name, format_float(c.value), format_float(c.expected), format_float(e),
                        format_float(c.tolerance), ok ? "1" : "0"});
    }
    ordered_json r = {{"checks", list}, {"all_passed", all}};
    return Outcome{r, t};
  };
}

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table = {
      {"rho", cmd_rho},
      {"theta", cmd_theta},
      {"ralpha", cmd_ralpha},
      {"orthocheck", cmd_orthocheck},
      {"moments", cmd_moments},
      {"second-moment", cmd_second_moment},
      {"cdf", cmd_cdf},
      {"mollify", cmd_mollify},
      {"nonvanishing", cmd_nonvanishing},
      {"farey", cmd_farey},
      {"growth", cmd_growth},
      {"exceptional", cmd_exceptional},
      {"almost-all", cmd_almost_all},
      {"oracle-check", cmd_oracle_check},
  };
  return table;
}

void add_u64(CLI::App& app, const std::string& name, std::optional<u64>& target, const std::string& help) {
  app.add_option_function<u64>(name, [&target](const u64& v) { target = v; }, help);
}

void add_f64(CLI::App& app, const std::string& name, std::optional<double>& target, const std::string& help) {
  app.add_option_function<double>(name, [&target](const double& v) { target = v; }, help);
}

// FNV-1a, stable across platforms, for cache file names.
std::string cache_key(const std::string& text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::optional<Outcome> cache_lookup(const std::filesystem::path& file, const ordered_json& params) {
  std::ifstream in(file);
  if (!in) return std::nullopt;
  const auto entry = ordered_json::parse(in, nullptr, false);
  if (entry.is_discarded() || !entry.contains("params") || entry["params"] != params) return std::nullopt;
  Outcome o{entry["result"], std::nullopt};
  if (entry.contains("csv")) {
    o.csv = CsvTable{entry["csv"]["header"].get<std::vector<std::string>>(),
                     entry["csv"]["rows"].get<std::vector<std::vector<std::string>>>()};
  }
  return o;
}

void cache_store(const std::filesystem::path& file, const std::string& command, const ordered_json& params,
                 const Outcome& o) {
  std::filesystem::create_directories(file.parent_path());
  ordered_json entry = {{"command", command}, {"params", params}, {"result", o.result}};
  if (o.csv) entry["csv"] = {{"header", o.csv->header}, {"rows", o.csv->rows}};
  std::ofstream(file) << entry.dump() << '\n';
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Subgroup character-sum and L-value experiments", "lfl"};
  app.set_version_flag("--version", std::string(version_string()));
  std::vector<std::string> names;
  for (const auto& [name, fn] : handlers()) names.push_back(name);
  app.add_option("command", o.command, "Experiment to run")->required()->check(CLI::IsMember(names));
  add_u64(app, "--p", o.p, "Prime modulus");
  add_u64(app, "--lambda", o.lambda, "Residue for rho");
  add_u64(app, "--d", o.d, "Subgroup order, d | p-1");
  add_u64(app, "--k", o.k, "Moment / product exponent");
  add_f64(app, "--alpha", o.alpha, "Exponent for ralpha");
  add_u64(app, "--Q", o.Q, "Farey order, or survey start (range [Q, 2Q])");
  add_u64(app, "--Qlo", o.Qlo, "Survey range start");
  add_u64(app, "--Qhi", o.Qhi, "Survey range end");
  add_u64(app, "--D", o.D, "Order bound for exceptional primes");
  add_u64(app, "--R", o.R, "rho bound for exceptional primes");
  add_u64(app, "--H", o.H, "Mollifier length");
  add_u64(app, "--ell", o.ell, "Farey order for membership counts");
  add_f64(app, "--epsilon-nv", o.epsilon_nv, "Nonvanishing threshold");
  add_u64(app, "--N", o.N, "Cutoff / sample count");
  add_u64(app, "--seed", o.seed, "Seed for random selections");
  add_f64(app, "--fraction", o.fraction, "Subset fraction for growth");
  add_f64(app, "--xmax", o.xmax, "Upper end of the cdf grid");
  app.add_option("--filter", o.filter, "Character filter")->check(CLI::IsMember({"all", "odd"}));
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", o.out, "Output file (default stdout)");
  app.add_option("--cache", o.cache, "Directory for cached results");
  app.add_option("--threads", o.threads, "Worker threads")
      ->envname("LFL_THREADS")
      ->check(CLI::Range(1u, 1024u));
  app.add_flag("--no-meta", o.no_meta, "Omit the meta block");
  app.add_flag("--verbose", o.verbose, "One summary line on stderr");
  app.add_flag("--exclude-principal", o.exclude_principal, "Drop the principal character");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << version_string() << '\n';
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.get_name() << ": " << e.what() << '\n';
    return 2;
  }

  const auto start = std::chrono::steady_clock::now();
  Params params(o);
  Outcome outcome;
  try {
    set_thread_count(o.threads);
    const Handler& handler = handlers().at(o.command);
    const Job job = handler(params);
    std::optional<std::filesystem::path> cache_file;
    if (!o.cache.empty()) {
      cache_file = std::filesystem::path(o.cache) / (o.command + "-" + cache_key(params.json().dump()) + ".json");
      if (auto hit = cache_lookup(*cache_file, params.json())) outcome = std::move(*hit);
    }
    if (outcome.result.is_null()) {
      outcome = job();
      if (cache_file) cache_store(*cache_file, o.command, params.json(), outcome);
    }
  } catch (const UsageError& e) {
    err << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "InternalError: " << e.what() << '\n';
    return 1;
  }
  const double elapsed =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  std::string text;
  if (o.format == "csv") {
    text = (outcome.csv ? *outcome.csv : flat_csv(outcome.result)).render();
  } else {
    ordered_json doc = {{"command", o.command}, {"params", params.json()}, {"result", outcome.result}};
    if (!o.no_meta) doc["meta"] = {{"version", version_string()}, {"elapsed_ms", number(elapsed)}, {"threads", o.threads}};
    text = doc.dump(2) + "\n";
  }
  if (o.out.empty()) {
    out << text;
  } else {
    std::ofstream file(o.out, std::ios::binary);
    if (!file) {
      err << "OutputError: cannot open " << o.out << '\n';
      return 2;
    }
    file << text;
  }
  if (o.verbose) err << "lfl: " << o.command << " finished in " << format_float(elapsed) << " ms\n";
  if (o.command == "oracle-check" && !outcome.result.value("all_passed", false)) {
    err << "OracleMismatch: at least one oracle check failed\n";
    return 1;
  }
  return 0;
}

}  // namespace lfl::io
