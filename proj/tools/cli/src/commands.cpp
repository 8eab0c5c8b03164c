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

#include "aircov/cli/commands.hpp"

#include "aircov/analytic_engine.hpp"
#include "aircov/cli/figures.hpp"
#include "aircov/cli/output.hpp"
#include "aircov/cli/run_config.hpp"
#include "aircov/errors.hpp"
#include "aircov/monte_carlo.hpp"
#include "aircov/sweep_optimizer.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <memory>
#include <sstream>

#include "CLI11.hpp"

namespace aircov::cli {

namespace {

using clock_type = std::chrono::steady_clock;

double elapsed_ms(clock_type::time_point t0) {
  return std::chrono::duration<double, std::milli>(clock_type::now() - t0).count();
}

SweepMethod method_or(const RunConfig &cfg, SweepMethod fallback) {
  if (cfg.method.empty())
    return fallback;
  const auto m = parse_sweep_method(cfg.method);
  if (!m)
    throw invalid_scenario("method", "expected analytic, monte_carlo or both");
  return *m;
}

void check_format(const RunConfig &cfg) {
  if (cfg.format != "csv" && cfg.format != "json")
    throw invalid_scenario("format", "expected csv or json");
}

std::vector<std::string> header_comments(const RunConfig &cfg, std::vector<std::string> extra = {}) {
  std::vector<std::string> c{"aircov " + cfg.command};
  for (auto &e : extra)
    c.push_back(std::move(e));
  c.push_back("config: " + to_json(cfg).dump());
  return c;
}

void emit(const RunConfig &cfg, const Table &table, const std::vector<std::string> &comments, std::ostream &out) {
  auto write = [&](std::ostream &os) {
    if (cfg.format == "json")
      write_json(os, table);
    else
      write_csv(os, table, comments);
  };
  if (cfg.out.empty()) {
    write(out);
    return;
  }
  std::ofstream file(cfg.out, std::ios::binary);
  if (!file)
    throw invalid_scenario("out", "cannot open '" + cfg.out + "' for writing");
  write(file);
}

std::string result_line(const CoverageResult &r, double wall_ms) {
  std::string line = "p_cov=" + format_fixed(r.value, 6) + " abs_err=" + format_number(r.abs_error_estimate) +
                     " method=" + std::string(to_string(r.method));
  if (r.method == Method::monte_carlo)
    line += " std_err=" + format_number(r.std_error) + " trials=" + std::to_string(r.trials);
  line += " wall_ms=" + format_fixed(wall_ms, 1);
  if (r.clamped)
    line += " warning=clamped";
  return line;
}

int cmd_coverage(const RunConfig &cfg, std::ostream &out) {
  const Scenario sc = to_settings(cfg).scenario();
  const SweepMethod method = method_or(cfg, SweepMethod::analytic);
  Table t{{"method", "p_cov", "abs_err", "std_err", "wall_ms"}, {}};
  auto report = [&](const CoverageResult &r, double ms) {
    out << result_line(r, ms) << '\n';
    t.rows.push_back({std::string(to_string(r.method)), r.value, r.abs_error_estimate, r.std_error, ms});
  };
  if (method != SweepMethod::monte_carlo) {
    const auto t0 = clock_type::now();
    const auto r = coverage_probability(sc);
    report(r, elapsed_ms(t0));
  }
  if (method != SweepMethod::analytic) {
    const auto t0 = clock_type::now();
    const auto r = estimate_coverage(sc, mc_config(cfg));
    report(r, elapsed_ms(t0));
  }
  if (!cfg.out.empty())
    emit(cfg, t, header_comments(cfg), out);
  return exit_ok;
}

int cmd_validate(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
  if (cfg.trials < 10000)
    throw invalid_scenario("trials", "validation requires at least 10000 trials");
  const McConfig mc = mc_config(cfg);
  const ScenarioSettings base = to_settings(cfg);

  Table t{{"h_uav_m", "tilt_deg", "p_cov_analytic", "p_cov_mc", "mc_std_error", "abs_diff", "tolerance", "result"},
          {}};
  std::size_t failures = 0;
  for (double h : {25.0, 40.0, 70.0, 100.0, 150.0, 200.0})
    for (double tilt : {0.0, 6.0, 13.0, 20.0}) {
      ScenarioSettings s = base;
      s.params.ue_height_m = h;
      s.tilt_deg = tilt;
      const Scenario sc = s.scenario();
      const auto a = coverage_probability(sc);
      const auto m = estimate_coverage(sc, mc);
      const double diff = std::abs(a.value - m.value);
      const double tol = std::max(0.01, 3.0 * m.std_error);
      const bool pass = diff <= tol;
      failures += pass ? 0 : 1;
      t.rows.push_back({h, tilt, a.value, m.value, m.std_error, diff, tol, std::string(pass ? "pass" : "fail")});
    }
  emit(cfg, t, header_comments(cfg), out);
  err << "validate: " << (t.rows.size() - failures) << "/" << t.rows.size() << " points within tolerance\n";
  return failures == 0 ? exit_ok : exit_validation_mismatch;
}

int run_sweep_and_emit(const RunConfig &cfg, const SweepSpec &spec, const std::vector<std::string> &comments,
                       std::ostream &out, std::ostream &err) {
  const SweepResult result = run_sweep(spec);
  bool failed = false;
  for (const auto &row : result.rows)
    if (!row.failure.empty()) {
      failed = true;
      err << "point " << format_number(row.axis_value) << " (" << to_string(row.method) << ") failed: " << row.failure
          << '\n';
    }
  emit(cfg, sweep_table(spec, result), comments, out);
  return failed ? exit_numerical_failure : exit_ok;
}

int cmd_sweep(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
  if (cfg.axis.empty())
    throw invalid_scenario("axis", "required for sweep (ue_height, tilt_deg, beamwidth_deg, floor_db, lambda_density)");
  const auto axis = parse_axis(cfg.axis);
  if (!axis)
    throw invalid_scenario("axis", "unknown axis '" + cfg.axis + "'");
  if (cfg.grid.empty())
    throw invalid_scenario("grid", "required for sweep");
  SweepSpec spec;
  spec.base = to_settings(cfg);
  spec.axis = *axis;
  spec.grid = parse_grid(cfg.grid);
  spec.overlays = parse_overlays(cfg.overlays);
  spec.method = method_or(cfg, SweepMethod::analytic);
  spec.mc = mc_config(cfg);
  spec.threads = cfg.threads;
  return run_sweep_and_emit(cfg, spec, header_comments(cfg), out, err);
}

int cmd_optimize_tilt(const RunConfig &cfg, std::ostream &out) {
  const auto t0 = clock_type::now();
  const TiltOptimum best = optimal_tilt(to_settings(cfg), cfg.tilt_lo, cfg.tilt_hi, cfg.resolution, {}, cfg.threads);
  const double ms = elapsed_ms(t0);
  out << "tilt_deg=" << format_fixed(best.tilt_deg, 3) << " p_cov=" << format_fixed(best.coverage, 6)
      << " evaluations=" << best.evaluations << " wall_ms=" << format_fixed(ms, 1) << '\n';
  if (!cfg.out.empty()) {
    Table t{{"tilt_deg", "p_cov", "evaluations"}, {{best.tilt_deg, best.coverage, static_cast<long long>(best.evaluations)}}};
    emit(cfg, t, header_comments(cfg), out);
  }
  return exit_ok;
}

std::string describe_overlays(const std::vector<std::pair<SweepAxis, std::vector<double>>> &lists) {
  std::string s;
  for (const auto &[axis, values] : lists) {
    if (!s.empty())
      s += ';';
    s += std::string(to_string(axis)) + '=';
    for (std::size_t i = 0; i < values.size(); ++i)
      s += (i ? "," : "") + format_number(values[i]);
  }
  return s;
}

int cmd_figure(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
  const auto preset = figure_preset(cfg.figure);
  if (!preset) {
    std::string known;
    for (const auto &n : figure_names())
      known += (known.empty() ? "" : ", ") + n;
    throw invalid_scenario("figure", "unknown figure '" + cfg.figure + "' (known: " + known + ")");
  }
  SweepSpec spec;
  spec.base = to_settings(cfg);
  for (const auto &a : preset->base)
    if (!cfg.explicit_keys.contains(std::string(to_string(a.parameter))))
      apply(spec.base, a.parameter, a.value);
  spec.axis = preset->axis;
  const std::string grid = cfg.grid.empty() ? preset->grid : cfg.grid;
  spec.grid = parse_grid(grid);
  const std::string overlays = cfg.overlays.empty() ? describe_overlays(preset->overlays) : cfg.overlays;
  spec.overlays = parse_overlays(overlays);
  spec.method = method_or(cfg, preset->method);
  spec.mc = mc_config(cfg);
  spec.threads = cfg.threads;

  std::vector<std::string> extra{
      preset->name + ": " + preset->description,
      "preset: axis=" + std::string(to_string(spec.axis)) + " grid=" + grid + " overlays=" + overlays +
          " method=" + std::string(to_string(spec.method)),
  };
  return run_sweep_and_emit(cfg, spec, header_comments(cfg, std::move(extra)), out, err);
}

struct Binding {
  CLI::Option *option;
  std::function<void(RunConfig &)> assign;
};

template <class T>
void bind_option(CLI::App &app, std::vector<Binding> &bindings, T RunConfig::*member, const std::string &flags,
          const std::string &key, const std::string &desc) {
  auto store = std::make_shared<T>();
  CLI::Option *opt = app.add_option(flags, *store, desc);
  bindings.push_back({opt, [store, member, key](RunConfig &c) {
                        c.*member = *store;
                        c.explicit_keys.insert(key);
                      }});
}

} // namespace

int run(std::span<const std::string> args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Downlink coverage of aerial and terrestrial users under down-tilted base-station antennas"};
  app.name("aircov");
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  app.add_option("--config", config_path, "Flat JSON configuration file; flags override its values");

  std::vector<Binding> b;
  bind_option(app, b, &RunConfig::lambda_density, "--lambda-density", "lambda_density", "Base stations per km^2");
  bind_option(app, b, &RunConfig::tx_power_dbm, "--tx-power-dbm", "tx_power_dbm", "Transmit power in dBm");
  bind_option(app, b, &RunConfig::bs_height, "--bs-height", "bs_height", "Base-station height in m");
  bind_option(app, b, &RunConfig::ue_height, "--ue-height", "ue_height", "User height in m");
  bind_option(app, b, &RunConfig::fading_m, "--fading-m", "fading_m", "Nakagami shape (integer >= 1)");
  bind_option(app, b, &RunConfig::path_loss_alpha, "--path-loss-alpha,--alpha", "path_loss_alpha", "Path-loss exponent (> 2)");
  bind_option(app, b, &RunConfig::sir_threshold_db, "--sir-threshold-db", "sir_threshold_db", "SIR threshold in dB");
  bind_option(app, b, &RunConfig::tilt_deg, "--tilt", "tilt_deg", "Down-tilt in degrees");
  bind_option(app, b, &RunConfig::beamwidth_deg, "--beamwidth", "beamwidth_deg", "3 dB beamwidth in degrees");
  bind_option(app, b, &RunConfig::floor_db, "--floor-db", "floor_db", "Sidelobe floor (max attenuation) in dB");
  bind_option(app, b, &RunConfig::trials, "--trials", "trials", "Monte Carlo trials");
  bind_option(app, b, &RunConfig::seed, "--seed", "seed", "Monte Carlo seed");
  bind_option(app, b, &RunConfig::sim_radius, "--sim-radius", "sim_radius", "Monte Carlo disk radius in m");
  bind_option(app, b, &RunConfig::threads, "--threads", "threads", "Worker threads (0 = all cores)");
  bind_option(app, b, &RunConfig::method, "--method", "method", "analytic, monte_carlo or both");
  bind_option(app, b, &RunConfig::axis, "--axis", "axis", "Sweep axis");
  bind_option(app, b, &RunConfig::grid, "--grid", "grid", "Grid as lo:step:hi or v1,v2,...");
  bind_option(app, b, &RunConfig::overlays, "--overlay", "overlays", "Curves, e.g. tilt_deg=0,6,13;ue_height=40");
  bind_option(app, b, &RunConfig::tilt_lo, "--tilt-lo", "tilt_lo", "Lower end of the tilt search range");
  bind_option(app, b, &RunConfig::tilt_hi, "--tilt-hi", "tilt_hi", "Upper end of the tilt search range");
  bind_option(app, b, &RunConfig::resolution, "--resolution", "resolution", "Tilt grid resolution in degrees");
  bind_option(app, b, &RunConfig::out, "--out", "out", "Output file (default: stdout)");
  bind_option(app, b, &RunConfig::format, "--format", "format", "csv or json");
  bool no_far_field = false;
  app.add_flag("--no-far-field", no_far_field, "Disable the far-field mean interference in Monte Carlo");

  app.add_subcommand("coverage", "Coverage probability of one scenario");
  app.add_subcommand("validate", "Analytic versus Monte Carlo over a built-in altitude x tilt grid");
  app.add_subcommand("sweep", "One-dimensional parameter sweep with optional overlays");
  app.add_subcommand("optimize-tilt", "Coverage-maximizing down-tilt");
  auto *fig = app.add_subcommand("figure", "Data for one of the figure presets (fig3 .. fig8)");
  std::string figure_name;
  fig->add_option("name", figure_name, "fig3, fig4, fig5, fig6, fig7 or fig8")->required();

  std::vector<const char *> argv{"aircov"};
  for (const auto &a : args)
    argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_invalid_input;
  }

  try {
    RunConfig cfg;
    if (!config_path.empty())
      cfg = load_config_file(config_path, cfg);
    for (const auto &binding : b)
      if (binding.option->count() > 0)
        binding.assign(cfg);
    if (no_far_field) {
      cfg.far_field = false;
      cfg.explicit_keys.insert("far_field");
    }
    cfg.command = app.get_subcommands().front()->get_name();
    if (cfg.command == "figure")
      cfg.figure = figure_name;
    check_format(cfg);
    err << "# config: " << to_json(cfg).dump() << '\n';

    if (cfg.command == "coverage")
      return cmd_coverage(cfg, out);
    if (cfg.command == "validate")
      return cmd_validate(cfg, out, err);
    if (cfg.command == "sweep")
      return cmd_sweep(cfg, out, err);
    if (cfg.command == "optimize-tilt")
      return cmd_optimize_tilt(cfg, out);
    return cmd_figure(cfg, out, err);
  } catch (const quadrature_error &e) {
    err << "error: numerical failure: " << e.what() << " (value " << format_number(e.value()) << ", error estimate "
        << format_number(e.abs_error()) << ")\n";
    return exit_numerical_failure;
  } catch (const std::invalid_argument &e) {
    err << "error: invalid input: " << e.what() << '\n';
    return exit_invalid_input;
  } catch (const std::domain_error &e) {
    err << "error: invalid input: " << e.what() << '\n';
    return exit_invalid_input;
  }
}

} // namespace aircov::cli
