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

#include "aircov/cli/output.hpp"
#include "aircov/sweep_optimizer.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace aircov::cli {

// Grid choices behind each figure reproduction. Base assignments apply unless
// the user set that parameter explicitly.
struct FigurePreset {
  std::string name;
  std::string description;
  SweepAxis axis = SweepAxis::tilt_deg;
  std::string grid;
  std::vector<std::pair<SweepAxis, std::vector<double>>> overlays;
  std::vector<Assignment> base;
  SweepMethod method = SweepMethod::analytic;
};

std::optional<FigurePreset> figure_preset(std::string_view name);
std::vector<std::string> figure_names();

// CSV column name for an axis, e.g. "h_uav_m" for ue_height.
std::string column_name(SweepAxis axis);

// Wide table: axis column, one column per overlay parameter, then
// p_cov_analytic and/or p_cov_mc, mc_halfwidth.
Table sweep_table(const SweepSpec &spec, const SweepResult &result);

} // namespace aircov::cli
