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

#include "aircov/cli/figures.hpp"

#include <cmath>
#include <limits>

namespace aircov::cli {

namespace {

std::vector<FigurePreset> make_presets() {
  using A = SweepAxis;
  std::vector<FigurePreset> p;
  p.push_back({"fig3", "coverage versus UE altitude for several down-tilts, analytic and Monte Carlo", A::ue_height,
               "20:10:200", {{A::tilt_deg, {0.0, 6.0, 13.0}}}, {}, SweepMethod::both});
  p.push_back({"fig4", "coverage versus down-tilt, terrestrial (1.5 m) and aerial users", A::tilt_deg, "0:1:30",
               {{A::ue_height, {1.5, 40.0, 70.0, 100.0}}}, {}, SweepMethod::analytic});
  p.push_back({"fig5", "coverage versus down-tilt for several sidelobe floors", A::tilt_deg, "0:1:30",
               {{A::floor_db, {20.0, 25.0, 30.0}}, {A::ue_height, {1.5, 40.0}}}, {}, SweepMethod::analytic});
  p.push_back({"fig6", "coverage versus 3 dB beamwidth", A::beamwidth_deg, "10:2:40",
               {{A::ue_height, {1.5, 40.0, 70.0, 100.0}}}, {}, SweepMethod::analytic});
  p.push_back({"fig7", "coverage versus base-station density", A::lambda_density, "1:1:30",
               {{A::tilt_deg, {0.0, 6.0, 13.0}}, {A::ue_height, {1.5, 40.0}}}, {}, SweepMethod::analytic});
  p.push_back({"fig8", "coverage versus down-tilt at 40 m for several densities", A::tilt_deg, "0:1:30",
               {{A::lambda_density, {1.0, 5.0, 10.0, 20.0}}}, {{A::ue_height, 40.0}}, SweepMethod::analytic});
  return p;
}

const std::vector<FigurePreset> &presets() {
  static const std::vector<FigurePreset> all = make_presets();
  return all;
}

} // namespace

std::optional<FigurePreset> figure_preset(std::string_view name) {
  for (const auto &p : presets())
    if (p.name == name)
      return p;
  return std::nullopt;
}

std::vector<std::string> figure_names() {
  std::vector<std::string> names;
  for (const auto &p : presets())
    names.push_back(p.name);
  return names;
}

std::string column_name(SweepAxis axis) {
  switch (axis) {
  case SweepAxis::ue_height:
    return "h_uav_m";
  case SweepAxis::tilt_deg:
    return "tilt_deg";
  case SweepAxis::beamwidth_deg:
    return "beamwidth_deg";
  case SweepAxis::floor_db:
    return "floor_db";
  case SweepAxis::lambda_density:
    return "lambda_per_km2";
  }
  return "value";
}

Table sweep_table(const SweepSpec &spec, const SweepResult &result) {
  const bool analytic = spec.method != SweepMethod::monte_carlo;
  const bool mc = spec.method != SweepMethod::analytic;

  Table t;
  t.columns.push_back(column_name(spec.axis));
  if (!spec.overlays.empty())
    for (const auto &a : spec.overlays.front().assignments)
      t.columns.push_back(column_name(a.parameter));
  if (analytic)
    t.columns.push_back("p_cov_analytic");
  if (mc) {
    t.columns.push_back("p_cov_mc");
    t.columns.push_back("mc_halfwidth");
  }

  // Rows arrive grid-major, overlay-minor, analytic before Monte Carlo.
  const std::size_t per_point = (analytic ? 1 : 0) + (mc ? 1 : 0);
  for (std::size_t i = 0; i + per_point <= result.rows.size(); i += per_point) {
    const SweepRow &first = result.rows[i];
    std::vector<Cell> row{first.axis_value};
    if (first.overlay)
      for (const auto &a : first.overlay->assignments)
        row.emplace_back(a.value);
    for (std::size_t k = 0; k < per_point; ++k) {
      const SweepRow &r = result.rows[i + k];
      row.emplace_back(r.value);
      if (r.method == Method::monte_carlo)
        row.emplace_back(r.error_estimate);
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

} // namespace aircov::cli
