#include <benchmark/benchmark.h>

#include "wsqrt/paths.hpp"
#include "wsqrt/sqrt_process.hpp"

static void BM_GenerateWiener(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::uint64_t path = 0;
  for (auto _ : state) {
    auto p = wsqrt::generate_wiener(n, 1.0 / static_cast<double>(n), 42, path++);
    benchmark::DoNotOptimize(p.increments.data());
  }
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) * state.range(0));
}
BENCHMARK(BM_GenerateWiener)->Arg(1 << 10)->Arg(1 << 16)->Arg(1 << 20);

static void BM_PowerVariation(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto p = wsqrt::generate_wiener(n, 1.0 / static_cast<double>(n), 42, 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(wsqrt::power_variation(p, 3.0));
  }
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) * state.range(0));
}
BENCHMARK(BM_PowerVariation)->Arg(1 << 16)->Arg(1 << 20);

static void BM_SampleFree(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto w = wsqrt::generate_wiener(n, 1.0 / static_cast<double>(n), 42, 0);
  for (auto _ : state) {
    auto x = wsqrt::sample_free(w, 0.0);
    benchmark::DoNotOptimize(x.increments.data());
  }
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) * state.range(0));
}
BENCHMARK(BM_SampleFree)->Arg(1 << 16)->Arg(1 << 20);

static void BM_ResidualEnsemble(benchmark::State& state) {
  const auto paths = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    auto r = wsqrt::residual_ensemble_stats(42, paths, 1000, 1e-3, 0.0, 4);
    benchmark::DoNotOptimize(r.rms);
  }
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) * state.range(0) * 1000);
}
BENCHMARK(BM_ResidualEnsemble)->Arg(256)->Arg(1024);

BENCHMARK_MAIN();
