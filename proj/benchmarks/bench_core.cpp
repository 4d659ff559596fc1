// Copyright 2026 The causal-switch-teleport Authors
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

#include <benchmark/benchmark.h>

#include <numbers>

#include "cst/analytic.hpp"
#include "cst/experiments.hpp"
#include "cst/optimizer.hpp"
#include "cst/oracle.hpp"

namespace {

using namespace cst;

const NoiseSpec kNoise(0.4, 0.3, 0.2, 0.1);
const ControlSpec kControl(0.3);
const MeasurementSpec kMeasurement(1.0, 0.7);

void BM_evaluate(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(evaluate(kNoise, kControl, kMeasurement, default_input()));
}
BENCHMARK(BM_evaluate);

void BM_combine(benchmark::State& state) {
  const TraceSums sums = trace_sums(kNoise, input_density(default_input()));
  for (auto _ : state) benchmark::DoNotOptimize(combine(sums, switch_weights(kControl, kMeasurement)));
}
BENCHMARK(BM_combine);

void BM_oracle_simulate(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(oracle::simulate(kNoise, kControl, kMeasurement, default_input()));
}
BENCHMARK(BM_oracle_simulate);

void BM_optimize(benchmark::State& state) {
  OptimizerConfig cfg;
  cfg.grid_density = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(optimize_measurement(kNoise, kControl, default_input(), cfg));
}
BENCHMARK(BM_optimize)->Arg(32)->Arg(65)->Arg(129);

void BM_contour(benchmark::State& state) {
  SweepOptions opts;
  opts.threads = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(contour_theta_phi(NoiseSpec::from_p(1.0 / 3.0), ControlSpec(0.5), default_input(), 181, opts));
  }
}
BENCHMARK(BM_contour)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
