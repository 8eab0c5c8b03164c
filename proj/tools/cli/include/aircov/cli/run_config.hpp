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

#include "aircov/monte_carlo.hpp"
#include "aircov/sweep_optimizer.hpp"

#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace aircov::cli {

// Every knob of a CLI run in human units (dBm, dB, degrees, BS/km^2). Field
// names match the keys of the JSON config file.
struct RunConfig {
  std::string command;

  double lambda_density = 10.0; // BS per km^2
  double tx_power_dbm = 43.0;
  double bs_height = 19.0;
  double ue_height = 100.0;
  int fading_m = 2;
  double path_loss_alpha = 2.5;
  double sir_threshold_db = -10.0;
  double tilt_deg = 6.0;
  double beamwidth_deg = 10.0;
  double floor_db = 20.0;

  std::uint64_t trials = 100000;
  std::uint64_t seed = 42;
  double sim_radius = 5000.0;
  bool far_field = true;
  unsigned threads = 0;

  // Empty strings mean "command default".
  std::string method;
  std::string axis;
  std::string grid;     // "lo:step:hi" or "v1,v2,..."
  std::string overlays; // "tilt_deg=0,6,13;ue_height=1.5,40"
  double tilt_lo = 0.0;
  double tilt_hi = 30.0;
  double resolution = 0.5;
  std::string figure;

  std::string out;
  std::string format = "csv";

  // Keys set by a config file or flag rather than by defaults.
  std::set<std::string> explicit_keys;
};

// Overlays `obj` (a flat JSON object of scalars) onto `cfg`. Unknown keys or
// wrong types throw invalid_scenario naming the key.
void apply_json(RunConfig &cfg, const nlohmann::json &obj);
RunConfig load_config_file(const std::string &path, RunConfig base = {});
nlohmann::json to_json(const RunConfig &cfg);

// Single conversion point from human units to the linear SI model.
ScenarioSettings to_settings(const RunConfig &cfg);
// Inverse of to_settings for the scenario fields; other fields are copied from `base`.
RunConfig from_settings(const ScenarioSettings &settings, RunConfig base = {});
McConfig mc_config(const RunConfig &cfg);

std::vector<double> parse_grid(std::string_view text);
std::vector<Overlay> parse_overlays(std::string_view text);

} // namespace aircov::cli
