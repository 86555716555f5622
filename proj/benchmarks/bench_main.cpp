#include <benchmark/benchmark.h>

#include "qlozenge/enumerate.hpp"
#include "qlozenge/formulas.hpp"
#include "qlozenge/qfactor.hpp"

using namespace qlozenge;

static void BM_CountHexagon(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Region hex = build_hexagon(n, n, n);
  for (auto _ : state) benchmark::DoNotOptimize(count_tilings(hex, Budget{120, std::size_t{1} << 26}));
  state.counters["triangles"] = static_cast<double>(hex.size());
}
BENCHMARK(BM_CountHexagon)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

static void BM_GenFunctionHexagonWt2(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Region hex = build_hexagon(n, n, n);
  for (auto _ : state) benchmark::DoNotOptimize(gen_function(hex, Weight::Wt2, Budget{120, std::size_t{1} << 26}));
  state.counters["triangles"] = static_cast<double>(hex.size());
}
BENCHMARK(BM_GenFunctionHexagonWt2)->DenseRange(2, 6, 1)->Unit(benchmark::kMillisecond);

static void BM_GenFunctionQRegion(benchmark::State& state) {
  const int v = static_cast<int>(state.range(0));
  const Region q = build_q_region({v, v, v, v, v, v, v, v});
  for (auto _ : state) benchmark::DoNotOptimize(gen_function(q, Weight::Wt2, Budget{1000, std::size_t{1} << 26}));
  state.counters["triangles"] = static_cast<double>(q.size());
}
BENCHMARK(BM_GenFunctionQRegion)->DenseRange(1, 2, 1)->Unit(benchmark::kMillisecond);

static void BM_OracleHexagon(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Region hex = build_hexagon(n, n, n);
  for (auto _ : state) benchmark::DoNotOptimize(gen_function_oracle(hex, Weight::Wt2));
}
BENCHMARK(BM_OracleHexagon)->DenseRange(1, 3, 1)->Unit(benchmark::kMillisecond);

// Theorem product for Q(n,...,n): assembly of the hyperfactorial exponents and exact resolution.
static void BM_ResolveQMain(benchmark::State& state) {
  const int v = static_cast<int>(state.range(0));
  const RegionParams p{v, v, v, v, v, v, v, v};
  for (auto _ : state) benchmark::DoNotOptimize(theorem_qmain(p));
}
BENCHMARK(BM_ResolveQMain)->DenseRange(1, 4, 1)->Unit(benchmark::kMicrosecond);

static void BM_ResolveMacMahon(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(macmahon_q(n, n, n));
}
BENCHMARK(BM_ResolveMacMahon)->RangeMultiplier(2)->Range(2, 8)->Unit(benchmark::kMicrosecond);

static void BM_ResolveAtOne(benchmark::State& state) {
  const int v = static_cast<int>(state.range(0));
  const RegionParams p{v, v, v, v, v, v, v, v};
  for (auto _ : state) benchmark::DoNotOptimize(theorem_main(p));
}
BENCHMARK(BM_ResolveAtOne)->DenseRange(1, 4, 1)->Unit(benchmark::kMicrosecond);
BENCHMARK_MAIN();
