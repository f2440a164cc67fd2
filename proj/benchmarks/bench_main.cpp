#include <benchmark/benchmark.h>

#include "lfl/congruence.hpp"
#include "lfl/farey.hpp"
#include "lfl/lvalues.hpp"
#include "lfl/modular_core.hpp"
#include "lfl/mollifier.hpp"
#include "lfl/parallel.hpp"
#include "lfl/prime_survey.hpp"

namespace {

void BM_BuildContext(benchmark::State& state) {
  const auto p = static_cast<lfl::u64>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lfl::build_prime_context(p));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BuildContext)->Arg(10007)->Arg(1000003)->Unit(benchmark::kMillisecond);

// rho over every residue: scan vs the pruned double loop.
void BM_RhoScanAll(benchmark::State& state) {
  const auto ctx = lfl::build_prime_context(static_cast<lfl::u64>(state.range(0)));
  for (auto _ : state) {
    lfl::u64 acc = 0;
    for (lfl::u64 l = 1; l < ctx.p(); ++l) acc += lfl::rho(ctx, l).rho;
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * (state.range(0) - 1));
}
BENCHMARK(BM_RhoScanAll)->Arg(499)->Arg(10007);

void BM_RhoBruteforceAll(benchmark::State& state) {
  const auto ctx = lfl::build_prime_context(static_cast<lfl::u64>(state.range(0)));
  for (auto _ : state) {
    lfl::u64 acc = 0;
    for (lfl::u64 l = 1; l < ctx.p(); ++l) acc += lfl::rho_bruteforce(ctx, l).rho;
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * (state.range(0) - 1));
}
BENCHMARK(BM_RhoBruteforceAll)->Arg(499);

void BM_Theta(benchmark::State& state) {
  const auto ctx = lfl::build_prime_context(100003);
  for (auto _ : state) benchmark::DoNotOptimize(lfl::theta(ctx, static_cast<lfl::u64>(state.range(0))));
}
BENCHMARK(BM_Theta)->Arg(3)->Arg(2381)->Unit(benchmark::kMicrosecond);

// All L(1, chi) over a subgroup dual: one folded DFT vs m pointwise sums.
void BM_LOneBatch(benchmark::State& state) {
  const auto ctx = lfl::build_prime_context(100003);
  for (auto _ : state) benchmark::DoNotOptimize(lfl::l_one_over_group(ctx, static_cast<lfl::u64>(state.range(0))));
}
BENCHMARK(BM_LOneBatch)->Arg(3)->Arg(21)->Unit(benchmark::kMillisecond);

void BM_LOnePointwise(benchmark::State& state) {
  const auto ctx = lfl::build_prime_context(100003);
  const lfl::u64 d = static_cast<lfl::u64>(state.range(0));
  const lfl::u64 m = (ctx.p() - 1) / d;
  for (auto _ : state) {
    for (lfl::u64 u = 1; u < m; ++u) benchmark::DoNotOptimize(lfl::l_one_exact(ctx, d * u));
  }
}
BENCHMARK(BM_LOnePointwise)->Arg(2381)->Unit(benchmark::kMillisecond);

void BM_LHalfBatch(benchmark::State& state) {
  const auto ctx = lfl::build_prime_context(100003);
  for (auto _ : state) benchmark::DoNotOptimize(lfl::l_half_over_group(ctx, 3));
}
BENCHMARK(BM_LHalfBatch)->Unit(benchmark::kMillisecond);

void BM_SmoothedK1(benchmark::State& state) {
  const auto ctx = lfl::build_prime_context(199);
  const double Z = 199.0 * 199.0 * 199.0 * 199.0;
  for (auto _ : state) benchmark::DoNotOptimize(lfl::l_one_smoothed(ctx, 5, 1, Z));
}
BENCHMARK(BM_SmoothedK1)->Unit(benchmark::kMillisecond);

void BM_ProductSetSize(benchmark::State& state) {
  lfl::set_thread_count(static_cast<unsigned>(state.range(1)));
  const auto F = lfl::farey_set(50);
  for (auto _ : state) benchmark::DoNotOptimize(lfl::product_set_size(F, static_cast<unsigned>(state.range(0))));
  lfl::set_thread_count(1);
}
BENCHMARK(BM_ProductSetSize)->Args({2, 1})->Args({3, 1})->Args({3, 4})->Unit(benchmark::kMillisecond);

void BM_Mollify(benchmark::State& state) {
  const auto ctx = lfl::build_prime_context(1999);
  for (auto _ : state) benchmark::DoNotOptimize(lfl::nonvanishing_report(ctx, 3, static_cast<lfl::u64>(state.range(0)), 1e-8));
}
BENCHMARK(BM_Mollify)->Arg(10)->Arg(50)->Unit(benchmark::kMicrosecond);

void BM_ExceptionalSet(benchmark::State& state) {
  lfl::set_thread_count(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(lfl::exceptional_set(3, 100000, 10, 20));
  lfl::set_thread_count(1);
}
BENCHMARK(BM_ExceptionalSet)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
