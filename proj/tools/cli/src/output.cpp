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

#include "aircov/cli/output.hpp"

#include <charconv>
#include <cmath>

#include "json.hpp"

namespace aircov::cli {

std::string format_number(double v) {
  if (std::isnan(v))
    return "nan";
  if (std::isinf(v))
    return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string format_fixed(double v, int digits) {
  if (!std::isfinite(v))
    return format_number(v);
  char buf[128];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed, digits);
  return std::string(buf, res.ptr);
}

namespace {

std::string csv_cell(const Cell &c) {
  if (const auto *d = std::get_if<double>(&c))
    return format_number(*d);
  if (const auto *i = std::get_if<long long>(&c))
    return std::to_string(*i);
  const auto &s = std::get<std::string>(c);
  if (s.find_first_of(",\"\n") == std::string::npos)
    return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"')
      q += '"';
    q += ch;
  }
  return q + "\"";
}

} // namespace

void write_csv(std::ostream &os, const Table &table, const std::vector<std::string> &comments) {
  for (const auto &c : comments)
    os << "# " << c << '\n';
  for (std::size_t i = 0; i < table.columns.size(); ++i)
    os << (i ? "," : "") << table.columns[i];
  os << '\n';
  for (const auto &row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i)
      os << (i ? "," : "") << csv_cell(row[i]);
    os << '\n';
  }
}

void write_json(std::ostream &os, const Table &table) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto &row : table.rows) {
    nlohmann::json obj = nlohmann::json::object();
    for (std::size_t i = 0; i < row.size() && i < table.columns.size(); ++i) {
      const Cell &c = row[i];
      if (const auto *d = std::get_if<double>(&c))
        obj[table.columns[i]] = std::isfinite(*d) ? nlohmann::json(*d) : nlohmann::json(nullptr);
      else if (const auto *n = std::get_if<long long>(&c))
        obj[table.columns[i]] = *n;
      else
        obj[table.columns[i]] = std::get<std::string>(c);
    }
    arr.push_back(std::move(obj));
  }
  os << arr.dump(2) << '\n';
}

} // namespace aircov::cli
