// Serial reference vs OpenMP grid kernels.

#include <benchmark/benchmark.h>

#include "lambconv/kernels.hpp"
#include "lambconv/scenario.hpp"

namespace {

using lambconv::kernels::Exec;

void BM_Fig1(benchmark::State& state, Exec exec) {
  const int steps = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto rows = lambconv::kernels::fig1_table(100.0, steps, exec);
    benchmark::DoNotOptimize(rows.data());
  }
  state.SetItemsProcessed(state.iterations() * steps);
}

void BM_Scenario(benchmark::State& state, Exec exec) {
  lambconv::scenario::ScenarioConfig cfg;
  cfg.time.steps = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto result = lambconv::scenario::run_scenario(cfg, exec);
    benchmark::DoNotOptimize(result.rows.data());
  }
  state.SetItemsProcessed(state.iterations() * cfg.time.steps);
}

void BM_Sweep(benchmark::State& state, Exec exec) {
  lambconv::scenario::ScenarioConfig cfg;
  lambconv::scenario::SweepSpec spec;
  spec.parameter = lambconv::scenario::SweepParameter::kDetuning;
  spec.objective = lambconv::scenario::Objective::kPulseEnergy;
  spec.min = -500.0;
  spec.max = 500.0;
  spec.steps = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto result = lambconv::scenario::run_sweep(cfg, spec, exec);
    benchmark::DoNotOptimize(result.rows.data());
  }
  state.SetItemsProcessed(state.iterations() * spec.steps);
}

BENCHMARK_CAPTURE(BM_Fig1, serial, Exec::kSerial)->Range(1 << 10, 1 << 18);
BENCHMARK_CAPTURE(BM_Fig1, openmp, Exec::kParallel)->Range(1 << 10, 1 << 18);
BENCHMARK_CAPTURE(BM_Scenario, serial, Exec::kSerial)->Range(1 << 10, 1 << 18);
BENCHMARK_CAPTURE(BM_Scenario, openmp, Exec::kParallel)->Range(1 << 10, 1 << 18);
BENCHMARK_CAPTURE(BM_Sweep, serial, Exec::kSerial)->Range(1 << 6, 1 << 12);
BENCHMARK_CAPTURE(BM_Sweep, openmp, Exec::kParallel)->Range(1 << 6, 1 << 12);

}  // namespace

BENCHMARK_MAIN();
