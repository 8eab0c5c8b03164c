// SPDX-License-Identifier: Apache-2.0
//
// aircov - coverage analysis of aerial users served by down-tilted terrestrial base stations
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------
#include "aircov/analytic_engine.hpp"
#include "aircov/antenna_geometry.hpp"
#include "aircov/monte_carlo.hpp"
#include "aircov/sweep_optimizer.hpp"

#include <benchmark/benchmark.h>

using namespace aircov;

namespace {

Scenario table_scenario(double ue_height, double tilt = 6.0) {
  return Scenario::make(default_network(ue_height), AntennaPattern(tilt, 10.0, 20.0));
}

void BM_GainLinear(benchmark::State &state) {
  const Scenario sc = table_scenario(100.0);
  double r = 81.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sc.gain(r));
    r = r < 1e5 ? r * 1.001 : 81.0;
  }
}
BENCHMARK(BM_GainLinear);

void BM_LaplaceExponent(benchmark::State &state) {
  const Scenario sc = table_scenario(100.0);
  const LaplaceExponent e(sc, 200.0);
  const double s = evaluation_point(sc, 200.0);
  const int j = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(e.derivative(s, j));
}
BENCHMARK(BM_LaplaceExponent)->Arg(0)->Arg(1)->Arg(2);

void BM_CoverageAnalytic(benchmark::State &state) {
  NetworkParams p = default_network(static_cast<double>(state.range(0)));
  p.fading_m = static_cast<int>(state.range(1));
  const Scenario sc = Scenario::make(p, default_pattern());
  for (auto _ : state)
    benchmark::DoNotOptimize(coverage_probability(sc));
}
BENCHMARK(BM_CoverageAnalytic)->Args({40, 2})->Args({100, 2})->Args({100, 4})->Unit(benchmark::kMillisecond);

void BM_MonteCarloTrial(benchmark::State &state) {
  const Scenario sc = table_scenario(100.0);
  McConfig cfg;
  const double radius = effective_radius(sc.params, cfg);
  const double far = far_field_interference(sc, radius);
  PppRealization real;
  std::uint64_t t = 0;
  for (auto _ : state) {
    Rng rng = trial_rng(cfg.seed, t++);
    sample_realization(sc.params, radius, rng, real);
    benchmark::DoNotOptimize(sir_realization(real, sc, far));
  }
  state.counters["bs_per_trial"] = sc.params.density_per_m2 * 3.141592653589793 * radius * radius;
}
BENCHMARK(BM_MonteCarloTrial)->Unit(benchmark::kMicrosecond);

void BM_OptimalTilt(benchmark::State &state) {
  ScenarioSettings s;
  s.params.ue_height_m = 40.0;
  for (auto _ : state)
    benchmark::DoNotOptimize(optimal_tilt(s, 0.0, 30.0, 0.5));
}
BENCHMARK(BM_OptimalTilt)->Unit(benchmark::kMillisecond)->Iterations(3);

} // namespace

BENCHMARK_MAIN();
