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
#include "aircov/monte_carlo.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace aircov {

// Mutable scenario description for sweeps. AntennaPattern is immutable, so the
// pattern is kept as its three free parameters here.
struct ScenarioSettings {
  NetworkParams params = default_network();
  double tilt_deg = 6.0;
  double beamwidth_deg = 10.0;
  double floor_db = 20.0;

  AntennaPattern pattern() const { return AntennaPattern(tilt_deg, beamwidth_deg, floor_db); }
  Scenario scenario() const { return Scenario::make(params, pattern()); }
};

enum class SweepAxis { ue_height, tilt_deg, beamwidth_deg, floor_db, lambda_density };
enum class SweepMethod { analytic, monte_carlo, both };

std::string_view to_string(SweepAxis axis);
std::optional<SweepAxis> parse_axis(std::string_view name);
std::string_view to_string(SweepMethod method);
std::optional<SweepMethod> parse_sweep_method(std::string_view name);

// Sets one parameter. Values are in human units: metres, degrees, dB, and
// base stations per km^2 for lambda_density.
void apply(ScenarioSettings &settings, SweepAxis axis, double value);

struct Assignment {
  SweepAxis parameter = SweepAxis::tilt_deg;
  double value = 0.0;
};

// One curve of a sweep: the parameters held fixed along it.
struct Overlay {
  std::vector<Assignment> assignments;
};

// Cartesian product of per-parameter value lists, first list outermost.
std::vector<Overlay> overlay_product(const std::vector<std::pair<SweepAxis, std::vector<double>>> &lists);

struct SweepSpec {
  ScenarioSettings base;
  SweepAxis axis = SweepAxis::ue_height;
  std::vector<double> grid;
  // One curve per overlay; empty means a single curve on the base scenario.
  std::vector<Overlay> overlays;
  SweepMethod method = SweepMethod::analytic;
  McConfig mc;
  QuadratureTolerance tol;
  unsigned threads = 0;

  // Checks the grid and every (grid, overlay) scenario up front.
  void validate() const;
};

struct SweepRow {
  double axis_value = 0.0;
  std::size_t overlay_id = 0;
  std::optional<Overlay> overlay;
  Method method = Method::analytic;
  double value = 0.0;
  double error_estimate = 0.0;
  double std_error = 0.0; // Monte Carlo only
  double runtime_ms = 0.0;
  std::string failure; // empty on success
};

struct SweepResult {
  // Grid-major, overlay-minor, analytic before Monte Carlo.
  std::vector<SweepRow> rows;
};

SweepResult run_sweep(const SweepSpec &spec);

struct TiltOptimum {
  double tilt_deg = 0.0;
  double coverage = 0.0;
  std::size_t evaluations = 0;
};

// Grid search over [lo, hi] at `resolution`, then golden-section refinement
// inside the bracket of the best grid point. Flat objectives return the
// smallest maximizing tilt.
TiltOptimum optimal_tilt(const ScenarioSettings &settings, double lo, double hi, double resolution,
                         const QuadratureTolerance &tol = {}, unsigned threads = 0);

} // namespace aircov
