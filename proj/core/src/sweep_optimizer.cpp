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

#include "aircov/sweep_optimizer.hpp"

#include "aircov/errors.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <functional>
#include <thread>

namespace aircov {

namespace {

void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)> &fn) {
  unsigned workers = threads != 0 ? threads : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, n));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i)
      fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++)
        fn(i);
    });
}

double analytic_value(const ScenarioSettings &s, const QuadratureTolerance &tol) {
  return coverage_probability(s.scenario(), tol).value;
}

} // namespace

std::string_view to_string(SweepAxis axis) {
  switch (axis) {
  case SweepAxis::ue_height:
    return "ue_height";
  case SweepAxis::tilt_deg:
    return "tilt_deg";
  case SweepAxis::beamwidth_deg:
    return "beamwidth_deg";
  case SweepAxis::floor_db:
    return "floor_db";
  case SweepAxis::lambda_density:
    return "lambda_density";
  }
  return "?";
}

std::optional<SweepAxis> parse_axis(std::string_view name) {
  for (auto a : {SweepAxis::ue_height, SweepAxis::tilt_deg, SweepAxis::beamwidth_deg, SweepAxis::floor_db,
                 SweepAxis::lambda_density})
    if (to_string(a) == name)
      return a;
  return std::nullopt;
}

std::string_view to_string(SweepMethod method) {
  switch (method) {
  case SweepMethod::analytic:
    return "analytic";
  case SweepMethod::monte_carlo:
    return "monte_carlo";
  case SweepMethod::both:
    return "both";
  }
  return "?";
}

std::optional<SweepMethod> parse_sweep_method(std::string_view name) {
  for (auto m : {SweepMethod::analytic, SweepMethod::monte_carlo, SweepMethod::both})
    if (to_string(m) == name)
      return m;
  if (name == "mc")
    return SweepMethod::monte_carlo;
  return std::nullopt;
}

void apply(ScenarioSettings &settings, SweepAxis axis, double value) {
  switch (axis) {
  case SweepAxis::ue_height:
    settings.params.ue_height_m = value;
    break;
  case SweepAxis::tilt_deg:
    settings.tilt_deg = value;
    break;
  case SweepAxis::beamwidth_deg:
    settings.beamwidth_deg = value;
    break;
  case SweepAxis::floor_db:
    settings.floor_db = value;
    break;
  case SweepAxis::lambda_density:
    settings.params.density_per_m2 = per_km2_to_per_m2(value);
    break;
  }
}

std::vector<Overlay> overlay_product(const std::vector<std::pair<SweepAxis, std::vector<double>>> &lists) {
  std::vector<Overlay> out{Overlay{}};
  for (const auto &[axis, values] : lists) {
    std::vector<Overlay> next;
    for (const Overlay &o : out)
      for (double v : values) {
        Overlay n = o;
        n.assignments.push_back({axis, v});
        next.push_back(std::move(n));
      }
    out = std::move(next);
  }
  if (out.size() == 1 && out.front().assignments.empty())
    out.clear();
  return out;
}

namespace {

void apply(ScenarioSettings &settings, const Overlay &overlay) {
  for (const Assignment &a : overlay.assignments)
    apply(settings, a.parameter, a.value);
}

} // namespace

void SweepSpec::validate() const {
  if (grid.empty())
    throw invalid_scenario("grid", "sweep grid is empty");
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (!(grid[i] > grid[i - 1]))
      throw invalid_scenario("grid", "sweep grid must be strictly increasing");
  const std::size_t curves = std::max<std::size_t>(overlays.size(), 1);
  for (double v : grid)
    for (std::size_t o = 0; o < curves; ++o) {
      ScenarioSettings s = base;
      apply(s, axis, v);
      if (!overlays.empty())
        apply(s, overlays[o]);
      (void)s.scenario();
    }
  if (method != SweepMethod::analytic && mc.trials < 100)
    throw invalid_scenario("trials", "Monte Carlo coverage needs at least 100 trials");
}

SweepResult run_sweep(const SweepSpec &spec) {
  spec.validate();
  const std::size_t curves = std::max<std::size_t>(spec.overlays.size(), 1);
  std::vector<Method> methods;
  if (spec.method != SweepMethod::monte_carlo)
    methods.push_back(Method::analytic);
  if (spec.method != SweepMethod::analytic)
    methods.push_back(Method::monte_carlo);

  SweepResult result;
  for (double v : spec.grid)
    for (std::size_t o = 0; o < curves; ++o)
      for (Method m : methods) {
        SweepRow row;
        row.axis_value = v;
        row.overlay_id = o;
        if (!spec.overlays.empty())
          row.overlay = spec.overlays[o];
        row.method = m;
        result.rows.push_back(row);
      }

  auto evaluate = [&](SweepRow &row) {
    ScenarioSettings s = spec.base;
    apply(s, spec.axis, row.axis_value);
    if (row.overlay)
      apply(s, *row.overlay);
    const auto t0 = std::chrono::steady_clock::now();
    try {
      const Scenario sc = s.scenario();
      const CoverageResult r =
          row.method == Method::analytic ? coverage_probability(sc, spec.tol) : estimate_coverage(sc, spec.mc);
      row.value = r.value;
      row.error_estimate = r.abs_error_estimate;
      row.std_error = r.std_error;
    } catch (const std::exception &e) {
      row.failure = e.what();
      row.value = std::nan("");
    }
    row.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  };

  // Analytic points run concurrently; Monte Carlo points parallelize internally.
  std::vector<std::size_t> analytic_rows;
  for (std::size_t i = 0; i < result.rows.size(); ++i) {
    if (result.rows[i].method == Method::analytic)
      analytic_rows.push_back(i);
    else
      evaluate(result.rows[i]);
  }
  parallel_for(analytic_rows.size(), spec.threads, [&](std::size_t i) { evaluate(result.rows[analytic_rows[i]]); });
  return result;
}

TiltOptimum optimal_tilt(const ScenarioSettings &settings, double lo, double hi, double resolution,
                         const QuadratureTolerance &tol, unsigned threads) {
  if (!(lo < hi))
    throw invalid_scenario("tilt_range", "lower bound must be below upper bound");
  if (!(resolution > 0.0))
    throw invalid_scenario("resolution", "must be > 0");

  const auto steps = static_cast<std::size_t>(std::floor((hi - lo) / resolution + 1e-9));
  std::vector<double> grid;
  for (std::size_t i = 0; i <= steps; ++i)
    grid.push_back(lo + static_cast<double>(i) * resolution);
  if (hi - grid.back() > 1e-9 * resolution)
    grid.push_back(hi);

  auto objective = [&](double tilt) {
    ScenarioSettings s = settings;
    s.tilt_deg = tilt;
    return analytic_value(s, tol);
  };

  std::vector<double> values(grid.size());
  parallel_for(grid.size(), threads, [&](std::size_t i) { values[i] = objective(grid[i]); });

  TiltOptimum best;
  best.evaluations = grid.size();
  std::size_t ib = 0;
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (values[i] > values[ib])
      ib = i;
  best.tilt_deg = grid[ib];
  best.coverage = values[ib];

  // Golden-section search on the bracket around the best grid point.
  double a = grid[ib > 0 ? ib - 1 : 0];
  double b = grid[std::min(ib + 1, grid.size() - 1)];
  if (b - a <= 0.0)
    return best;
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = objective(c);
  double fd = objective(d);
  best.evaluations += 2;
  const double x_tol = std::max(1e-3, resolution * 1e-3);
  while (b - a > x_tol) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = objective(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = objective(d);
    }
    ++best.evaluations;
  }
  const double x = fc >= fd ? c : d;
  const double fx = std::max(fc, fd);
  if (fx > best.coverage) {
    best.tilt_deg = x;
    best.coverage = fx;
  }
  return best;
}

} // namespace aircov
