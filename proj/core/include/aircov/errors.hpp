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

#include <stdexcept>
#include <string>

namespace aircov {

// Scenario or configuration value outside its valid range. `field()` names the offending parameter.
class invalid_scenario : public std::invalid_argument {
public:
  invalid_scenario(std::string field, const std::string &what)
      : std::invalid_argument(field + ": " + what), field_(std::move(field)) {}

  const std::string &field() const noexcept { return field_; }

private:
  std::string field_;
};

// Geometric impossibility, e.g. a 3D distance shorter than the height difference.
class domain_error : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// Adaptive quadrature failed to reach its tolerance.
class quadrature_error : public std::runtime_error {
public:
  quadrature_error(const std::string &what, double value, double abs_error)
      : std::runtime_error(what), value_(value), abs_error_(abs_error) {}

  double value() const noexcept { return value_; }
  double abs_error() const noexcept { return abs_error_; }

private:
  double value_;
  double abs_error_;
};

} // namespace aircov
