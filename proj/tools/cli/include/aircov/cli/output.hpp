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

#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace aircov::cli {

using Cell = std::variant<double, long long, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

// Shortest round-trip decimal form, independent of the global locale.
std::string format_number(double v);
std::string format_fixed(double v, int digits);

// Comment lines are written first, each prefixed with "# ". Line ending '\n'.
void write_csv(std::ostream &os, const Table &table, const std::vector<std::string> &comments = {});
// Array of objects keyed by column name. NaN becomes null.
void write_json(std::ostream &os, const Table &table);

} // namespace aircov::cli
