#include <benchmark/benchmark.h>

#include <array>

#include "lomnitz/lomnitz.hpp"

using namespace lomnitz;

static void BM_MittagLeffler(benchmark::State& state) {
  const double nu = state.range(0) / 100.0;
  double x = -0.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(mittag_leffler(nu, x));
    x = x < -40.0 ? -0.5 : x * 1.1;
  }
}
BENCHMARK(BM_MittagLeffler)->Arg(25)->Arg(50)->Arg(90);

static void BM_SolveRelaxation(benchmark::State& state) {
  const auto p = MaterialParameters::dimensionless(0.5);
  const UniformGrid grid{0.01, static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(solve_relaxation_only(p, grid));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SolveRelaxation)->RangeMultiplier(4)->Range(256, 16384)->Complexity(benchmark::oNSquared)
    ->Unit(benchmark::kMillisecond);

static void BM_OracleSolve(benchmark::State& state) {
  const auto p = MaterialParameters::dimensionless(0.5);
  const UniformGrid grid{0.01, static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(oracle_solve(p, grid));
}
BENCHMARK(BM_OracleSolve)->Arg(250)->Arg(1000)->Unit(benchmark::kMillisecond);

static void BM_HadamardDerivative(benchmark::State& state) {
  const OperatorConfig cfg{1.0, 1.0, 0.5};
  const auto input = log_power(cfg, 0.5);
  const int panels = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hadamard_derivative(cfg, input, 2.0, panels));
}
BENCHMARK(BM_HadamardDerivative)->Arg(1000)->Arg(10000);

static void BM_LaplaceCheck(benchmark::State& state) {
  const auto p = MaterialParameters::dimensionless(1.0);
  const auto phi = solve_relaxation_only(p, UniformGrid::covering(30.0, 0.01));
  for (auto _ : state) benchmark::DoNotOptimize(check_laplace_identity(p, phi, kDefaultProbes));
}
BENCHMARK(BM_LaplaceCheck);
BENCHMARK_MAIN();
