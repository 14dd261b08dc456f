// Copyright 2026 The qduopoly Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Serial reference versus OpenMP kernels. Set OMP_NUM_THREADS to vary the
// thread count.

#include <benchmark/benchmark.h>

#include "qduopoly/state_finder.h"
#include "support/grid_oracle.h"

namespace qduopoly {
namespace {

void BM_SweepSerial(benchmark::State& state) {
  const int steps = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(SweepWindowSerial(1.4, 1.9, steps));
  }
  state.SetItemsProcessed(state.iterations() * steps);
}
BENCHMARK(BM_SweepSerial)->Arg(200)->Arg(2000)->Unit(benchmark::kMillisecond);

void BM_SweepParallel(benchmark::State& state) {
  const int steps = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(SweepWindow(1.4, 1.9, steps));
  }
  state.SetItemsProcessed(state.iterations() * steps);
}
BENCHMARK(BM_SweepParallel)->Arg(200)->Arg(2000)->Unit(benchmark::kMillisecond);

oracle::GridSpec BenchGrid() {
  oracle::GridSpec spec;
  spec.q1_max = 1.0;
  spec.q2_max = 2.0;
  spec.step = 1e-3;
  return spec;
}

oracle::PopulationModel FinderModel() {
  const ModuliSquared m = ComputeCournotMatchingState(1.6).moduli;
  return {1.6, m.c11, m.c12, m.c21, m.c22};
}

void BM_GridOracleSerial(benchmark::State& state) {
  const oracle::PopulationModel m = FinderModel();
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle::GridBackwardsInductionSerial(m, BenchGrid()));
  }
}
BENCHMARK(BM_GridOracleSerial)->Unit(benchmark::kMillisecond);

void BM_GridOracleParallel(benchmark::State& state) {
  const oracle::PopulationModel m = FinderModel();
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle::GridBackwardsInduction(m, BenchGrid()));
  }
}
BENCHMARK(BM_GridOracleParallel)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace qduopoly

BENCHMARK_MAIN();
