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

#include "aircov/antenna_geometry.hpp"

#include "aircov/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace aircov {

namespace {

constexpr double deg_per_rad = 180.0 / std::numbers::pi;

// Distances within this relative slack below |h_d| are treated as |h_d|.
constexpr double r_min_slack = 1e-12;

} // namespace

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
double linear_to_db(double linear) { return 10.0 * std::log10(linear); }
double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }
double watts_to_dbm(double watts) { return 10.0 * std::log10(watts) + 30.0; }
double per_km2_to_per_m2(double per_km2) { return per_km2 * 1e-6; }
double per_m2_to_per_km2(double per_m2) { return per_m2 * 1e6; }

void NetworkParams::validate() const {
  if (!(density_per_m2 > 0.0) || !std::isfinite(density_per_m2))
    throw invalid_scenario("lambda_density", "must be > 0");
  if (!(tx_power_w > 0.0) || !std::isfinite(tx_power_w))
    throw invalid_scenario("tx_power", "must be > 0");
  if (!(bs_height_m > 0.0) || !std::isfinite(bs_height_m))
    throw invalid_scenario("bs_height", "must be > 0");
  if (!(ue_height_m > 0.0) || !std::isfinite(ue_height_m))
    throw invalid_scenario("ue_height", "must be > 0");
  if (ue_height_m == bs_height_m)
    throw invalid_scenario("ue_height", "must differ from bs_height (zero height difference is not supported)");
  if (fading_m < 1)
    throw invalid_scenario("fading_m", "must be an integer >= 1");
  if (!(path_loss_exp > 2.0) || !std::isfinite(path_loss_exp))
    throw invalid_scenario("path_loss_alpha", "must be > 2 for the interference integral to converge");
  if (!(sir_threshold > 0.0) || !std::isfinite(sir_threshold))
    throw invalid_scenario("sir_threshold", "must be > 0 in linear scale");
}

AntennaPattern::AntennaPattern(double tilt_deg, double beamwidth_deg, double floor_db)
    : tilt_deg_(tilt_deg), beamwidth_deg_(beamwidth_deg), floor_db_(floor_db) {
  if (!std::isfinite(tilt_deg))
    throw invalid_scenario("tilt_deg", "must be finite");
  if (!(beamwidth_deg > 0.0) || !std::isfinite(beamwidth_deg))
    throw invalid_scenario("beamwidth_deg", "must be > 0");
  if (!(floor_db > 0.0) || !std::isfinite(floor_db))
    throw invalid_scenario("floor_db", "must be > 0");
  floor_linear_ = db_to_linear(-floor_db_);
  half_span_deg_ = std::sqrt(floor_db_ / 12.0) * beamwidth_deg_;
}

double elevation_angle(double h_d, double r) {
  const double a = std::abs(h_d);
  if (!(r > 0.0) || r < a * (1.0 - r_min_slack))
    throw domain_error("elevation_angle: distance shorter than the height difference");
  const double ratio = std::clamp(h_d / r, -1.0, 1.0);
  return -std::asin(ratio) * deg_per_rad;
}

double vertical_gain_db(const AntennaPattern &pattern, double theta_deg) {
  const double x = (theta_deg - pattern.tilt_deg()) / pattern.beamwidth_deg();
  return -std::min(12.0 * x * x, pattern.floor_db());
}

std::vector<double> distance_breakpoints(const AntennaPattern &pattern, double h_d) {
  if (h_d == 0.0)
    throw invalid_scenario("ue_height", "breakpoints undefined for zero height difference");
  const double a = std::abs(h_d);
  std::vector<double> out;
  for (double theta : {pattern.theta1_deg(), pattern.theta2_deg()}) {
    // Aerial users see elevations in [-90, 0), terrestrial ones in (0, 90].
    const double magnitude = h_d > 0.0 ? -theta : theta;
    if (magnitude > 0.0 && magnitude <= 90.0)
      out.push_back(a / std::sin(magnitude / deg_per_rad));
  }
  std::sort(out.begin(), out.end());
  return out;
}

GeometryContext GeometryContext::make(const AntennaPattern &pattern, double h_d) {
  GeometryContext ctx;
  ctx.h_d = h_d;
  ctx.r_min = std::abs(h_d);
  ctx.breakpoints = distance_breakpoints(pattern, h_d);
  const double t1 = pattern.theta1_deg();
  const double m1 = h_d > 0.0 ? -t1 : t1;
  if (m1 > 0.0 && m1 <= 90.0)
    ctx.r1 = ctx.r_min / std::sin(m1 / deg_per_rad);
  return ctx;
}

double vertical_gain_linear(const AntennaPattern &pattern, const GeometryContext &ctx, double r) {
  if (r < ctx.r_min * (1.0 - r_min_slack))
    throw domain_error("vertical_gain_linear: distance below minimum feasible distance");
  return db_to_linear(vertical_gain_db(pattern, elevation_angle(ctx.h_d, r)));
}

Scenario Scenario::make(const NetworkParams &params, const AntennaPattern &pattern) {
  params.validate();
  return Scenario{params, pattern, GeometryContext::make(pattern, params.height_diff())};
}

NetworkParams default_network(double ue_height_m) {
  NetworkParams p;
  p.density_per_m2 = per_km2_to_per_m2(10.0);
  p.tx_power_w = dbm_to_watts(43.0);
  p.bs_height_m = 19.0;
  p.ue_height_m = ue_height_m;
  p.fading_m = 2;
  p.path_loss_exp = 2.5;
  p.sir_threshold = db_to_linear(-10.0);
  return p;
}

AntennaPattern default_pattern() { return AntennaPattern(6.0, 10.0, 20.0); }

} // namespace aircov
