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

#include "aircov/antenna_geometry.hpp"

#include <cmath>

namespace aircov::test {

inline NetworkParams network(double ue_height, double lambda_per_km2 = 10.0) {
  NetworkParams p = default_network(ue_height);
  p.density_per_m2 = per_km2_to_per_m2(lambda_per_km2);
  return p;
}

inline Scenario scenario(double ue_height, double tilt = 6.0, double beamwidth = 10.0, double floor_db = 20.0) {
  return Scenario::make(network(ue_height), AntennaPattern(tilt, beamwidth, floor_db));
}

inline bool rel_close(double a, double b, double rel) {
  return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b));
}

} // namespace aircov::test
