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

#include <optional>
#include <vector>

namespace aircov {

// ------------------------------------------------------------------------
// Unit conversions. Human units (dB, dBm, km^-2) are converted once at the
// configuration boundary; everything below works in linear SI units.
// ------------------------------------------------------------------------

double db_to_linear(double db);
double linear_to_db(double linear);
double dbm_to_watts(double dbm);
double watts_to_dbm(double watts);
double per_km2_to_per_m2(double per_km2);
double per_m2_to_per_km2(double per_m2);

// Network constants of the downlink scenario, linear SI units.
struct NetworkParams {
  double density_per_m2 = 1.0e-5; // base stations per square metre
  double tx_power_w = 19.952623149688797; // 43 dBm
  double bs_height_m = 19.0;
  double ue_height_m = 100.0;
  int fading_m = 2;               // Nakagami shape, integer >= 1
  double path_loss_exp = 2.5;     // alpha > 2
  double sir_threshold = 0.1;     // linear, -10 dB

  // Signed height difference ue - bs. Positive for aerial users.
  double height_diff() const { return ue_height_m - bs_height_m; }

  // Throws invalid_scenario naming the first offending field.
  void validate() const;
};

// 3GPP vertical radiation pattern with down-tilt, half-power beamwidth and
// sidelobe floor. All angles in degrees. Immutable once constructed.
class AntennaPattern {
public:
  AntennaPattern(double tilt_deg, double beamwidth_deg, double floor_db = 20.0);

  double tilt_deg() const { return tilt_deg_; }
  double beamwidth_deg() const { return beamwidth_deg_; }
  double floor_db() const { return floor_db_; }
  double floor_linear() const { return floor_linear_; }

  // Elevation angles where the quadratic main lobe meets the floor.
  double theta1_deg() const { return tilt_deg_ - half_span_deg_; }
  double theta2_deg() const { return tilt_deg_ + half_span_deg_; }

private:
  double tilt_deg_;
  double beamwidth_deg_;
  double floor_db_;
  double floor_linear_;
  double half_span_deg_; // sqrt(A_V / 12) * beamwidth
};

// Signed elevation angle (degrees) from a base station to a user at 3D
// distance r with height difference h_d = h_ue - h_bs. Negative when the user
// is above the base station. Throws domain_error when r < |h_d| or r <= 0.
double elevation_angle(double h_d, double r);

// Vertical gain in dB, -min(12 ((theta - tilt) / beamwidth)^2, A_V).
double vertical_gain_db(const AntennaPattern &pattern, double theta_deg);

// Sorted 3D distances in [|h_d|, inf) where the elevation crosses theta1 or
// theta2. Closed form, no root finding. Requires h_d != 0.
std::vector<double> distance_breakpoints(const AntennaPattern &pattern, double h_d);

struct GeometryContext {
  double h_d = 0.0;
  double r_min = 0.0;
  // Distance where the elevation equals theta1, when that lies in the
  // feasible elevation range of this user.
  std::optional<double> r1;
  // All gain breakpoints (r1 and the theta2 crossing, if any), sorted.
  std::vector<double> breakpoints;

  static GeometryContext make(const AntennaPattern &pattern, double h_d);
};

// Linear gain as a function of the 3D distance. Throws domain_error when
// r < ctx.r_min.
double vertical_gain_linear(const AntennaPattern &pattern, const GeometryContext &ctx, double r);

// Validated network + antenna bundle shared by the analytic and Monte Carlo
// evaluators.
struct Scenario {
  NetworkParams params;
  AntennaPattern pattern;
  GeometryContext geometry;

  // Validates params and derives the geometry. Throws invalid_scenario.
  static Scenario make(const NetworkParams &params, const AntennaPattern &pattern);

  double gain(double r) const { return vertical_gain_linear(pattern, geometry, r); }
};

// Reference deployment: 43 dBm, -10 dB threshold, m = 2, alpha = 2.5,
// 19 m masts, 10 BS/km^2, 6 deg tilt, 10 deg beamwidth, 20 dB floor.
NetworkParams default_network(double ue_height_m = 100.0);
AntennaPattern default_pattern();

} // namespace aircov
