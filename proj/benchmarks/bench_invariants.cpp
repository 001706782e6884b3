#include <benchmark/benchmark.h>

#include "zk/balance.hpp"
#include "zk/invariants.hpp"
#include "zk/strata.hpp"

namespace {

zk::BundleSpec bundle(int k, int j, const char* p) { return zk::BundleSpec::make(k, j, zk::parse_laurent(p)); }

void BM_Height(benchmark::State& state) {
  const auto b = bundle(3, 6, "z^-1*u + z^4*u^2");
  for (auto _ : state) benchmark::DoNotOptimize(zk::height(b));
}
BENCHMARK(BM_Height)->Unit(benchmark::kMillisecond);

void BM_Width(benchmark::State& state) {
  const auto b = bundle(2, 3, "u");
  for (auto _ : state) benchmark::DoNotOptimize(zk::width(b));
}
BENCHMARK(BM_Width)->Unit(benchmark::kMillisecond);

// width over growing j on Z_1, where the window is largest
void BM_WidthByJ(benchmark::State& state) {
  const auto b = bundle(1, static_cast<int>(state.range(0)), "z*u");
  for (auto _ : state) benchmark::DoNotOptimize(zk::width(b));
}
BENCHMARK(BM_WidthByJ)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_Invariants(benchmark::State& state) {
  const auto b = bundle(3, 6, "z^-1*u + z^4*u^2");
  for (auto _ : state) benchmark::DoNotOptimize(zk::invariants(b));
}
BENCHMARK(BM_Invariants)->Unit(benchmark::kMillisecond);

void BM_ScanZ2(benchmark::State& state) {
  zk::ScanOptions opts;
  opts.workers = 1;
  for (auto _ : state) benchmark::DoNotOptimize(zk::scan_strata(2, 3, opts));
}
BENCHMARK(BM_ScanZ2)->Unit(benchmark::kMillisecond);

void BM_Balance(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(zk::balance(1, {10, 4, 0, -3, -7, -10}));
}
BENCHMARK(BM_Balance);

}  // namespace

BENCHMARK_MAIN();
