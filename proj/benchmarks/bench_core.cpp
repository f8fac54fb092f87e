#include <benchmark/benchmark.h>

#include "capdist/closed_forms.hpp"
#include "capdist/composition.hpp"
#include "capdist/genfunc.hpp"
#include "capdist/recurrences.hpp"

using namespace capdist;

static void BM_CapacityHistogram(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    std::vector<std::uint64_t> hist(n + 1);
    for_each_B(n, [&](PartsView c) { ++hist[capacity(c)]; });
    benchmark::DoNotOptimize(hist.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(fib(static_cast<int>(n)).get_ui()));
}
BENCHMARK(BM_CapacityHistogram)->Arg(16)->Arg(20)->Arg(24)->Unit(benchmark::kMillisecond);

static void BM_EnumerateB(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_B(static_cast<std::uint64_t>(state.range(0))));
}
BENCHMARK(BM_EnumerateB)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

static void BM_BivariateSeries(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(gf_F(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_BivariateSeries)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

static void BM_TrivariateSeries(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(gf_Fpq(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_TrivariateSeries)->Arg(16)->Arg(22)->Unit(benchmark::kMillisecond);

static void BM_TrivariateRecurrence(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(bpq_seq(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_TrivariateRecurrence)->Arg(16)->Arg(22)->Arg(30)->Unit(benchmark::kMillisecond);

static void BM_TotalCapacityLarge(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(total_capacity(n));
}
BENCHMARK(BM_TotalCapacityLarge)->Arg(1000)->Arg(10000)->Arg(100000);

static void BM_Corollary(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    for (int which = 1; which <= 3; ++which) benchmark::DoNotOptimize(corollary_sides(n, which));
  }
}
BENCHMARK(BM_Corollary)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
