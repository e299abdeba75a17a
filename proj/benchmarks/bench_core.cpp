#include <benchmark/benchmark.h>

#include <algorithm>
#include <cmath>

#include "contana/convexity.hpp"
#include "contana/function.hpp"
#include "contana/modulus.hpp"
#include "contana/sampling.hpp"
#include "contana/worst_sum.hpp"

namespace {

using namespace contana;

const FunctionSpec& sqrt_fn() {
  static const FunctionSpec f(kind::Sqrt{}, Interval::closed(0, 1));
  return f;
}

void BM_EvalCantor(benchmark::State& state) {
  double x = 0.123456789;
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval_cantor(x, static_cast<int>(state.range(0))));
    x = std::fmod(x + 0.3819660112501051, 1.0);
  }
}
BENCHMARK(BM_EvalCantor)->Arg(16)->Arg(64);

// Sliding-window modulus against the quadratic pair scan it replaces.
void BM_ModulusSliding(benchmark::State& state) {
  const SampleGrid grid = sample(sqrt_fn(), sqrt_fn().domain(), state.range(0));
  const auto deltas = delta_ladder(grid);
  for (auto _ : state) benchmark::DoNotOptimize(modulus_on_grid(grid, deltas));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ModulusSliding)->RangeMultiplier(4)->Range(1 << 8, 1 << 14)->Complexity();

void BM_ModulusPairScan(benchmark::State& state) {
  const SampleGrid grid = sample(sqrt_fn(), sqrt_fn().domain(), state.range(0));
  const auto deltas = delta_ladder(grid);
  for (auto _ : state) {
    std::vector<double> omega(deltas.size(), 0.0);
    for (std::size_t i = 0; i < grid.size(); ++i)
      for (std::size_t j = i + 1; j < grid.size(); ++j) {
        const double gap = static_cast<double>(j - i) * grid.spacing;
        const double diff = std::abs(grid.values[j] - grid.values[i]);
        for (std::size_t k = 0; k < deltas.size(); ++k)
          if (gap <= deltas[k] * (1 + 1e-9)) omega[k] = std::max(omega[k], diff);
      }
    benchmark::DoNotOptimize(omega);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ModulusPairScan)->RangeMultiplier(4)->Range(1 << 8, 1 << 10)->Complexity();

void BM_OracleDP(benchmark::State& state) {
  const SampleGrid grid = sample(sqrt_fn(), sqrt_fn().domain(), state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(worst_ac_sum_oracle(grid, 0.25, 32));
}
BENCHMARK(BM_OracleDP)->Arg(201)->Arg(401);

void BM_UnitCells(benchmark::State& state) {
  const FunctionSpec f(kind::Cantor{}, Interval::closed(0, 1));
  const SampleGrid grid = sample(f, f.domain(), state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(worst_unit_cells(grid, 0.039));
}
BENCHMARK(BM_UnitCells)->Arg(20001)->Arg(131073);

void BM_DetectPartition(benchmark::State& state) {
  const FunctionSpec f(kind::XSquaredSinInv{}, Interval::closed(0, 1));
  const SampleGrid grid = sample(f, Interval::closed(1e-3, 1), state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(detect_partition(grid, -1.0, 32));
}
BENCHMARK(BM_DetectPartition)->Arg(1000)->Arg(99901);

}  // namespace

BENCHMARK_MAIN();
