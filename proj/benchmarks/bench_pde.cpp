#include <benchmark/benchmark.h>

#include "wsqrt/pde.hpp"

static void BM_EvolveReduced(benchmark::State& state) {
  const double dx = 1.0 / static_cast<double>(state.range(0));
  const wsqrt::GridSpec grid{-20.0, 20.0, dx};
  const auto psi0 = wsqrt::gaussian_packet(1.0, grid);
  const auto coeffs = wsqrt::free_coefficients(wsqrt::schrodinger_beta());
  for (auto _ : state) {
    auto psi = wsqrt::evolve(psi0, coeffs, 1e-3, 100);
    benchmark::DoNotOptimize(psi.values.data());
  }
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) * 100 *
                          static_cast<int64_t>(psi0.size()));
}
BENCHMARK(BM_EvolveReduced)->Arg(20)->Arg(40)->Arg(80);

static void BM_EvolveWithPotential(benchmark::State& state) {
  const wsqrt::GridSpec grid{-20.0, 20.0, 0.05};
  const auto psi0 = wsqrt::gaussian_packet(1.0, grid);
  const auto coeffs =
      wsqrt::interacting_coefficients([](double x, double) { return 0.5 * x * x; });
  for (auto _ : state) {
    auto psi = wsqrt::evolve(psi0, coeffs, 1e-3, 100);
    benchmark::DoNotOptimize(psi.values.data());
  }
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) * 100 *
                          static_cast<int64_t>(psi0.size()));
}
BENCHMARK(BM_EvolveWithPotential);

static void BM_AnalyticFree(benchmark::State& state) {
  const wsqrt::GridSpec grid{-20.0, 20.0, 0.05};
  for (auto _ : state) {
    auto psi = wsqrt::analytic_free(1.0, 1.0, grid);
    benchmark::DoNotOptimize(psi.values.data());
  }
}
BENCHMARK(BM_AnalyticFree);

BENCHMARK_MAIN();
