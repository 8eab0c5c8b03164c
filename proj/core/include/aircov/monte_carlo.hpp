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

#pragma once

#include "aircov/analytic_engine.hpp"
#include "aircov/antenna_geometry.hpp"

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace aircov {

struct McConfig {
  std::size_t trials = 100000;
  // Radius of the sampling disk around the user's ground projection. Sparse
  // networks get a larger disk, see effective_radius().
  double sim_radius_m = 5000.0;
  std::uint64_t seed = 42;
  // Add the mean interference of base stations beyond the disk. With
  // alpha close to 2 the truncated far field is not negligible.
  bool far_field_mean = true;
  // 0 selects std::thread::hardware_concurrency().
  unsigned threads = 0;
};

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

struct PppRealization {
  std::vector<Point2> positions; // ground positions relative to the user, metres
  std::vector<double> gains;     // Nakagami power gains, Gamma(m, 1/m)
};

using Rng = std::mt19937_64;

// Independent generator for trial `trial` under `seed`; trial results do not
// depend on execution order.
Rng trial_rng(std::uint64_t seed, std::uint64_t trial);

// Disk radius actually sampled: sim_radius_m, enlarged so that the disk holds
// on average at least as many base stations as 10 BS/km^2 over 5 km.
double effective_radius(const NetworkParams &params, const McConfig &cfg);

// Poisson number of base stations placed uniformly in a disk of radius
// cfg.sim_radius_m, each with its own fading gain.
PppRealization sample_realization(const NetworkParams &params, const McConfig &cfg, Rng &rng);
void sample_realization(const NetworkParams &params, double radius_m, Rng &rng, PppRealization &out);

// Mean interference power from base stations further than `radius_m`
// (ground distance) from the user, by Campbell's theorem.
double far_field_interference(const Scenario &scenario, double radius_m);

// SIR of the nearest base station against all others. Ties in distance go to
// the lowest index. `extra_interference` is added to the denominator.
// Throws std::invalid_argument with fewer than two base stations.
double sir_realization(const PppRealization &real, const Scenario &scenario, double extra_interference = 0.0);

// Fraction of trials with SIR >= threshold. abs_error_estimate is the 95%
// Wilson half-width. Bit-identical for identical inputs.
CoverageResult estimate_coverage(const Scenario &scenario, const McConfig &cfg);

struct LaplaceEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::size_t trials = 0;
};

// Sample mean of exp(-s I) where I sums interferers beyond 3D distance
// serving_r.
LaplaceEstimate estimate_laplace_functional(const Scenario &scenario, double serving_r, double s,
                                            const McConfig &cfg);

// 95% Wilson score interval half-width for `successes` out of `n`.
double wilson_half_width(std::size_t successes, std::size_t n, double z = 1.959963984540054);

} // namespace aircov
