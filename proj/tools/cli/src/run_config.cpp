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

#include "aircov/cli/run_config.hpp"

#include "aircov/errors.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>

namespace aircov::cli {

namespace {

using json = nlohmann::json;

template <class T>
T get_as(const json &v, const std::string &key) {
  if constexpr (std::is_same_v<T, bool>) {
    if (!v.is_boolean())
      throw invalid_scenario(key, "expected a boolean");
    return v.get<bool>();
  } else if constexpr (std::is_same_v<T, std::string>) {
    if (!v.is_string())
      throw invalid_scenario(key, "expected a string");
    return v.get<std::string>();
  } else if constexpr (std::is_integral_v<T>) {
    if (!v.is_number_integer() || (std::is_unsigned_v<T> && v.get<long long>() < 0))
      throw invalid_scenario(key, "expected a non-negative integer");
    return v.get<T>();
  } else {
    if (!v.is_number())
      throw invalid_scenario(key, "expected a number");
    return v.get<T>();
  }
}

using Field = std::pair<std::function<void(RunConfig &, const json &)>, std::function<json(const RunConfig &)>>;

template <class T>
Field field(T RunConfig::*member, const std::string &key) {
  return {[member, key](RunConfig &c, const json &v) { c.*member = get_as<T>(v, key); },
          [member](const RunConfig &c) { return json(c.*member); }};
}

const std::map<std::string, Field> &fields() {
  static const std::map<std::string, Field> table = {
      {"command", field(&RunConfig::command, "command")},
      {"lambda_density", field(&RunConfig::lambda_density, "lambda_density")},
      {"tx_power_dbm", field(&RunConfig::tx_power_dbm, "tx_power_dbm")},
      {"bs_height", field(&RunConfig::bs_height, "bs_height")},
      {"ue_height", field(&RunConfig::ue_height, "ue_height")},
      {"fading_m", field(&RunConfig::fading_m, "fading_m")},
      {"path_loss_alpha", field(&RunConfig::path_loss_alpha, "path_loss_alpha")},
      {"sir_threshold_db", field(&RunConfig::sir_threshold_db, "sir_threshold_db")},
      {"tilt_deg", field(&RunConfig::tilt_deg, "tilt_deg")},
      {"beamwidth_deg", field(&RunConfig::beamwidth_deg, "beamwidth_deg")},
      {"floor_db", field(&RunConfig::floor_db, "floor_db")},
      {"trials", field(&RunConfig::trials, "trials")},
      {"seed", field(&RunConfig::seed, "seed")},
      {"sim_radius", field(&RunConfig::sim_radius, "sim_radius")},
      {"far_field", field(&RunConfig::far_field, "far_field")},
      {"threads", field(&RunConfig::threads, "threads")},
      {"method", field(&RunConfig::method, "method")},
      {"axis", field(&RunConfig::axis, "axis")},
      {"grid", field(&RunConfig::grid, "grid")},
      {"overlays", field(&RunConfig::overlays, "overlays")},
      {"tilt_lo", field(&RunConfig::tilt_lo, "tilt_lo")},
      {"tilt_hi", field(&RunConfig::tilt_hi, "tilt_hi")},
      {"resolution", field(&RunConfig::resolution, "resolution")},
      {"figure", field(&RunConfig::figure, "figure")},
      {"out", field(&RunConfig::out, "out")},
      {"format", field(&RunConfig::format, "format")},
  };
  return table;
}

double parse_double(std::string_view text, const std::string &key) {
  while (!text.empty() && text.front() == ' ')
    text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ')
    text.remove_suffix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty())
    throw invalid_scenario(key, "cannot parse number '" + std::string(text) + "'");
  return v;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos)
      break;
    start = pos + 1;
  }
  return parts;
}

} // namespace

void apply_json(RunConfig &cfg, const json &obj) {
  if (!obj.is_object())
    throw invalid_scenario("config", "expected a flat JSON object");
  for (const auto &[key, value] : obj.items()) {
    const auto it = fields().find(key);
    if (it == fields().end())
      throw invalid_scenario(key, "unknown configuration key");
    if (value.is_object() || value.is_array())
      throw invalid_scenario(key, "configuration values must be scalars");
    it->second.first(cfg, value);
    cfg.explicit_keys.insert(key);
  }
}

RunConfig load_config_file(const std::string &path, RunConfig base) {
  std::ifstream in(path);
  if (!in)
    throw invalid_scenario("config", "cannot open '" + path + "'");
  json obj;
  try {
    obj = json::parse(in);
  } catch (const json::parse_error &e) {
    throw invalid_scenario("config", std::string("malformed JSON: ") + e.what());
  }
  apply_json(base, obj);
  return base;
}

json to_json(const RunConfig &cfg) {
  json obj = json::object();
  for (const auto &[key, f] : fields())
    obj[key] = f.second(cfg);
  return obj;
}

ScenarioSettings to_settings(const RunConfig &cfg) {
  ScenarioSettings s;
  s.params.density_per_m2 = per_km2_to_per_m2(cfg.lambda_density);
  s.params.tx_power_w = dbm_to_watts(cfg.tx_power_dbm);
  s.params.bs_height_m = cfg.bs_height;
  s.params.ue_height_m = cfg.ue_height;
  s.params.fading_m = cfg.fading_m;
  s.params.path_loss_exp = cfg.path_loss_alpha;
  s.params.sir_threshold = db_to_linear(cfg.sir_threshold_db);
  s.tilt_deg = cfg.tilt_deg;
  s.beamwidth_deg = cfg.beamwidth_deg;
  s.floor_db = cfg.floor_db;
  return s;
}

RunConfig from_settings(const ScenarioSettings &s, RunConfig base) {
  base.lambda_density = per_m2_to_per_km2(s.params.density_per_m2);
  base.tx_power_dbm = watts_to_dbm(s.params.tx_power_w);
  base.bs_height = s.params.bs_height_m;
  base.ue_height = s.params.ue_height_m;
  base.fading_m = s.params.fading_m;
  base.path_loss_alpha = s.params.path_loss_exp;
  base.sir_threshold_db = linear_to_db(s.params.sir_threshold);
  base.tilt_deg = s.tilt_deg;
  base.beamwidth_deg = s.beamwidth_deg;
  base.floor_db = s.floor_db;
  return base;
}

McConfig mc_config(const RunConfig &cfg) {
  McConfig mc;
  mc.trials = cfg.trials;
  mc.seed = cfg.seed;
  mc.sim_radius_m = cfg.sim_radius;
  mc.far_field_mean = cfg.far_field;
  mc.threads = cfg.threads;
  if (!(cfg.sim_radius > 0.0))
    throw invalid_scenario("sim_radius", "must be > 0");
  return mc;
}

std::vector<double> parse_grid(std::string_view text) {
  std::vector<double> out;
  if (text.find(':') != std::string_view::npos) {
    const auto parts = split(text, ':');
    if (parts.size() != 3)
      throw invalid_scenario("grid", "range form is lo:step:hi");
    const double lo = parse_double(parts[0], "grid");
    const double step = parse_double(parts[1], "grid");
    const double hi = parse_double(parts[2], "grid");
    if (!(step > 0.0) || hi < lo)
      throw invalid_scenario("grid", "range needs step > 0 and hi >= lo");
    const auto n = static_cast<long long>(std::floor((hi - lo) / step + 1e-9));
    for (long long i = 0; i <= n; ++i)
      out.push_back(lo + static_cast<double>(i) * step);
  } else {
    for (auto p : split(text, ','))
      out.push_back(parse_double(p, "grid"));
  }
  if (out.empty())
    throw invalid_scenario("grid", "empty grid");
  return out;
}

std::vector<Overlay> parse_overlays(std::string_view text) {
  std::vector<std::pair<SweepAxis, std::vector<double>>> lists;
  if (text.empty())
    return {};
  for (auto group : split(text, ';')) {
    const std::size_t eq = group.find('=');
    if (eq == std::string_view::npos)
      throw invalid_scenario("overlays", "expected parameter=v1,v2,...");
    const auto axis = parse_axis(group.substr(0, eq));
    if (!axis)
      throw invalid_scenario("overlays", "unknown parameter '" + std::string(group.substr(0, eq)) + "'");
    std::vector<double> values;
    for (auto v : split(group.substr(eq + 1), ','))
      values.push_back(parse_double(v, "overlays"));
    lists.emplace_back(*axis, std::move(values));
  }
  return overlay_product(lists);
}

} // namespace aircov::cli
