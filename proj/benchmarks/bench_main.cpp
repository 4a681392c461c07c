#include "cpap/brute.hpp"
#include "cpap/cluster.hpp"
#include "cpap/dfinite.hpp"
#include "cpap/dp_enumerator.hpp"
#include "cpap/map_chain.hpp"
#include "cpap/ode.hpp"
#include "cpap/poles.hpp"
#include "cpap/series.hpp"

#include <benchmark/benchmark.h>

using namespace cpap;

namespace {

void BM_DpLength4(benchmark::State& state) {
  const auto p = Pattern::parse("1342");
  const auto N = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dp::count_series(p, N));
}
BENCHMARK(BM_DpLength4)->Arg(20)->Arg(40)->Arg(60)->Unit(benchmark::kMillisecond);

void BM_DpLength5(benchmark::State& state) {
  const auto p = Pattern::parse("13524");
  const auto N = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dp::count_series(p, N));
}
BENCHMARK(BM_DpLength5)->Arg(20)->Arg(30)->Unit(benchmark::kMillisecond);

void BM_Brute(benchmark::State& state) {
  const auto p = Pattern::parse("1342");
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(brute_count(p, n));
}
BENCHMARK(BM_Brute)->DenseRange(7, 9)->Unit(benchmark::kMillisecond);

void BM_ClusterPipeline(benchmark::State& state) {
  const auto N = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gj_invert(signed_sum(clusters_tree(5, N)), N));
}
BENCHMARK(BM_ClusterPipeline)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_IterateT(benchmark::State& state) {
  const auto N = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(iterate_T(4, N));
}
BENCHMARK(BM_IterateT)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_PoleChain(benchmark::State& state) {
  const int depth = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pole_chain(4, depth, PoleMode::single));
}
BENCHMARK(BM_PoleChain)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_OdeSolve(benchmark::State& state) {
  const auto eq = ode_library(ClassId::parse("5.XI"));
  const auto N = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ode_series_solve(eq, N));
}
BENCHMARK(BM_OdeSolve)->Arg(60)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_DfiniteFit(benchmark::State& state) {
  const auto y = ode_series_solve(ode_library(ClassId::parse("5.II")), 40);
  for (auto _ : state) benchmark::DoNotOptimize(dfinite_fit(y, 4, 4));
}
BENCHMARK(BM_DfiniteFit)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
