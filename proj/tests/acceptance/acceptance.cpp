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
// Acceptance gate: one PASS/FAIL line per criterion. Exit status is nonzero
// when any criterion fails.

#include "aircov/analytic_engine.hpp"
#include "aircov/antenna_geometry.hpp"
#include "aircov/monte_carlo.hpp"
#include "aircov/sweep_optimizer.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <string>
#include <vector>

using namespace aircov;

namespace {

// Criterion 1
constexpr std::size_t kOracleTrials = 100000;
constexpr std::uint64_t kOracleSeed = 42;
constexpr double kOracleAbsTol = 0.01;
constexpr double kOracleSeMultiple = 3.0;
// Criteria 2 and 4
constexpr double kTiltLo = 0.0;
constexpr double kTiltHi = 30.0;
constexpr double kTiltResolution = 0.5;
constexpr double kOptimumLo = 12.0;
constexpr double kOptimumHi = 14.0;
constexpr double kDensityShiftTol = 1.0;
// Criterion 3
constexpr double kSaturationTilt = 25.0;
constexpr double kSaturationSpread = 0.02;
// Criterion 6
constexpr double kBeamwidthFlatness = 2e-3;
// Criterion 7
constexpr double kFiniteDifferenceRel = 1e-4;
constexpr double kPdfNormalization = 1e-8;
constexpr double kGainTol = 1e-12;
constexpr double kSingleTermTol = 1e-10;
constexpr double kInvarianceTol = 2e-3;
constexpr double kKsFactor = 1.5;
// Criterion 8
constexpr double kReducedFloorDb = 15.0;

const std::vector<double> kAerial{40.0, 70.0, 100.0};
const std::vector<double> kOptimumHeights{1.5, 40.0, 70.0, 100.0};

int failures = 0;

void report(int id, const char *name, bool pass, const std::string &detail) {
  std::printf("%s criterion %d (%s): %s\n", pass ? "PASS" : "FAIL", id, name, detail.c_str());
  std::fflush(stdout);
  failures += pass ? 0 : 1;
}

std::string fmt(const char *f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

ScenarioSettings settings(double ue, double tilt = 6.0) {
  ScenarioSettings s;
  s.params.ue_height_m = ue;
  s.tilt_deg = tilt;
  return s;
}

double coverage(const ScenarioSettings &s) { return coverage_probability(s.scenario()).value; }

double optimum(ScenarioSettings s) { return optimal_tilt(s, kTiltLo, kTiltHi, kTiltResolution).tilt_deg; }

void criterion1() {
  McConfig cfg;
  cfg.trials = kOracleTrials;
  cfg.seed = kOracleSeed;
  bool pass = true;
  double worst_ratio = 0.0;
  std::string worst;
  for (double h : {25.0, 40.0, 70.0, 100.0, 150.0, 200.0})
    for (double tilt : {0.0, 6.0, 13.0, 20.0}) {
      const Scenario sc = settings(h, tilt).scenario();
      const double a = coverage_probability(sc).value;
      const CoverageResult m = estimate_coverage(sc, cfg);
      const double tol = std::max(kOracleAbsTol, kOracleSeMultiple * m.std_error);
      const double diff = std::abs(a - m.value);
      std::printf("  h=%5.1f tilt=%4.1f analytic=%.5f mc=%.5f se=%.5f diff=%.5f tol=%.5f\n", h, tilt, a, m.value,
                  m.std_error, diff, tol);
      pass = pass && diff <= tol;
      if (diff / tol > worst_ratio) {
        worst_ratio = diff / tol;
        worst = "h=" + fmt("%g", h) + " tilt=" + fmt("%g", tilt) + " diff=" + fmt("%.4f", diff) + " tol=" +
                fmt("%.4f", tol);
      }
    }
  report(1, "analytic matches Monte Carlo on 24 points", pass, "worst " + worst);
}

std::vector<double> base_optima;

void criterion2() {
  std::string detail2;
  bool pass2 = true;
  for (double h : kOptimumHeights) {
    const double t = optimum(settings(h));
    base_optima.push_back(t);
    pass2 = pass2 && t >= kOptimumLo && t <= kOptimumHi;
    detail2 += "h=" + fmt("%g", h) + ":" + fmt("%.2f", t) + " ";
  }
  report(2, "optimal tilt in [12, 14]", pass2, detail2);
}

void criterion4() {
  bool pass4 = true;
  std::string detail4;
  for (std::size_t i = 0; i < kOptimumHeights.size(); ++i)
    for (double lambda : {5.0, 20.0}) {
      ScenarioSettings s = settings(kOptimumHeights[i]);
      apply(s, SweepAxis::lambda_density, lambda);
      const double t = optimum(s);
      const double shift = std::abs(t - base_optima[i]);
      pass4 = pass4 && shift <= kDensityShiftTol;
      detail4 += "h=" + fmt("%g", kOptimumHeights[i]) + ",l=" + fmt("%g", lambda) + ":" + fmt("%.2f", t) + " ";
    }
  report(4, "optimum shifts <= 1 deg for density 5 and 20", pass4, detail4);
}

void criterion3() {
  double worst = 0.0;
  double worst_tilt = 0.0;
  for (double tilt = kSaturationTilt; tilt <= kTiltHi + 1e-9; tilt += kTiltResolution) {
    double lo = 1.0;
    double hi = 0.0;
    for (double h : kAerial) {
      const double v = coverage(settings(h, tilt));
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    if (hi - lo > worst) {
      worst = hi - lo;
      worst_tilt = tilt;
    }
  }
  report(3, "aerial spread < 0.02 for tilt >= 25", worst < kSaturationSpread,
         "max spread " + fmt("%.4f", worst) + " at tilt " + fmt("%g", worst_tilt));
}

void criterion5() {
  std::vector<double> curve;
  std::vector<double> heights;
  for (double h = 20.0; h <= 200.0 + 1e-9; h += 10.0) {
    heights.push_back(h);
    curve.push_back(coverage(settings(h, 6.0)));
  }
  std::string minima;
  for (std::size_t i = 1; i + 1 < curve.size(); ++i)
    if (curve[i] < curve[i - 1] && curve[i] < curve[i + 1])
      minima += fmt("%g", heights[i]) + " ";
  report(5, "tilt 6 altitude curve has an interior minimum", !minima.empty(),
         minima.empty() ? "no interior local minimum" : "local minimum at h=" + minima);
}

void criterion6() {
  double lo = 1.0;
  double hi = 0.0;
  for (double bw = 10.0; bw <= 40.0 + 1e-9; bw += 2.0) {
    ScenarioSettings s = settings(1.5);
    s.beamwidth_deg = bw;
    const double v = coverage(s);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  ScenarioSettings narrow = settings(40.0);
  narrow.beamwidth_deg = 10.0;
  ScenarioSettings wide = settings(40.0);
  wide.beamwidth_deg = 40.0;
  const double a10 = coverage(narrow);
  const double a40 = coverage(wide);
  const bool flat = hi - lo < kBeamwidthFlatness;
  const bool better = a40 > a10;
  report(6, "terrestrial flat in beamwidth, aerial 40 m better at 40 deg", flat && better,
         "terrestrial variation " + fmt("%.4f", hi - lo) + (flat ? " ok" : " too large") + "; aerial " +
             fmt("%.4f", a10) + " -> " + fmt("%.4f", a40) + (better ? " ok" : " not better"));
}

struct SubCheck {
  std::string name;
  bool pass;
  std::string value;
};

void criterion7() {
  std::vector<SubCheck> checks;
  const Scenario table = settings(100.0).scenario();

  {
    const QuadratureTolerance tight{1e-15, 1e-12, 4000};
    const LaplaceExponent e(table, 200.0, tight);
    const double s_star = evaluation_point(table, 200.0);
    double worst = 0.0;
    for (double f : {1e-3, 1e-2, 1e-1, 1.0, 3.0}) {
      const double s = s_star * f;
      const double d = s * 1e-5;
      const double fd = (laplace_transform(e, s + d) - laplace_transform(e, s - d)) / (2.0 * d);
      const double an = laplace_derivative(e, s, 1);
      worst = std::max(worst, std::abs(an - fd) / std::abs(fd));
    }
    checks.push_back({"finite-difference", worst <= kFiniteDifferenceRel, fmt("%.2e", worst)});
  }
  {
    bool ok = true;
    for (double h : {1.5, 40.0, 100.0}) {
      NetworkParams p = settings(h).params;
      p.fading_m = 3;
      const Scenario sc = Scenario::make(p, default_pattern());
      const LaplaceExponent e(sc, std::abs(sc.geometry.h_d) + 50.0);
      double prev = 1.0;
      for (double s = 1.0; s < 1e9; s *= 10.0) {
        double eta = 0.0;
        const auto ell = e.normalized_laplace_derivatives(s, 2, eta);
        const double l = std::exp(-eta);
        ok = ok && l >= 0.0 && l <= prev && ell[1] <= 0.0 && ell[2] >= 0.0;
        prev = l;
      }
    }
    checks.push_back({"complete-monotonicity", ok, ok ? "ok" : "violated"});
  }
  {
    const NearestDistanceLaw law{per_km2_to_per_m2(10.0), 21.0};
    auto f = [&](double r) { return law.pdf(r); };
    const double mass = integrate(f, 21.0, 2000.0).value;
    checks.push_back({"pdf-normalization", std::abs(mass - 1.0) <= kPdfNormalization, fmt("%.2e", std::abs(mass - 1.0))});
  }
  {
    const AntennaPattern p = default_pattern();
    double worst = 0.0;
    bool range_ok = true;
    for (double d = 0.0; d <= 96.0; d += 0.1)
      worst = std::max(worst, std::abs(vertical_gain_db(p, 6.0 + d) - vertical_gain_db(p, 6.0 - d)));
    for (double theta = -90.0; theta <= 90.0; theta += 0.1) {
      const double g = vertical_gain_db(p, theta);
      range_ok = range_ok && g <= 0.0 && g >= -p.floor_db();
    }
    for (double h_d : {21.0, -17.5}) {
      const GeometryContext ctx = GeometryContext::make(p, h_d);
      for (double rb : ctx.breakpoints)
        worst = std::max(worst, std::abs(vertical_gain_linear(p, ctx, rb * (1 - 1e-14)) -
                                         vertical_gain_linear(p, ctx, rb * (1 + 1e-14))));
      for (double r = std::abs(h_d); r < 1e5; r *= 1.01) {
        const double via_theta = std::pow(10.0, vertical_gain_db(p, elevation_angle(h_d, r)) / 10.0);
        const double g = vertical_gain_linear(p, ctx, r);
        worst = std::max(worst, std::abs(g - via_theta) / via_theta);
      }
    }
    checks.push_back({"gain-symmetry-range-continuity", range_ok && worst <= kGainTol, fmt("%.2e", worst)});
  }
  {
    NetworkParams p = settings(100.0).params;
    p.fading_m = 1;
    const Scenario sc = Scenario::make(p, default_pattern());
    const NearestDistanceLaw law{p.density_per_m2, sc.geometry.r_min};
    auto integrand = [&](double r) {
      return laplace_transform(LaplaceExponent(sc, r), evaluation_point(sc, r)) * law.pdf(r);
    };
    const double direct = integrate_piecewise(integrand, sc.geometry.r_min, law.truncation_radius(1e-12),
                                              sc.geometry.breakpoints, 0.0).value;
    const double diff = std::abs(coverage_probability(sc).value - direct);
    checks.push_back({"single-term-series", diff <= kSingleTermTol, fmt("%.2e", diff)});
  }
  {
    const double a = coverage(ScenarioSettings{settings(100.0).params, 30.0, 10.0, 20.0});
    const double b = coverage(ScenarioSettings{settings(100.0).params, 30.0, 10.0, 30.0});
    checks.push_back({"floor-invariance", std::abs(a - b) <= kInvarianceTol, fmt("%.2e", std::abs(a - b))});
    // Constant gain with users on the base-station plane, where the PPP scaling argument applies.
    ScenarioSettings lo{settings(19.5).params, 30.0, 10.0, 20.0};
    ScenarioSettings hi = lo;
    apply(hi, SweepAxis::lambda_density, 100.0);
    const double d = std::abs(coverage(lo) - coverage(hi));
    ScenarioSettings tall_lo{settings(100.0).params, 30.0, 10.0, 20.0};
    ScenarioSettings tall_hi = tall_lo;
    apply(tall_hi, SweepAxis::lambda_density, 100.0);
    const double tall = std::abs(coverage(tall_lo) - coverage(tall_hi));
    checks.push_back({"density-invariance", d <= kInvarianceTol,
                      fmt("%.2e", d) + " (at h=100 m: " + fmt("%.3f", tall) + ")"});
  }
  {
    McConfig cfg;
    cfg.trials = 5000;
    cfg.threads = 1;
    const CoverageResult a = estimate_coverage(table, cfg);
    cfg.threads = 4;
    const CoverageResult b = estimate_coverage(table, cfg);
    const CoverageResult c = estimate_coverage(table, cfg);
    const bool same = a.value == b.value && b.value == c.value && a.covered == c.covered;
    checks.push_back({"seeded-determinism", same, same ? "bit-identical" : "differs"});
  }
  {
    const Scenario sc = settings(40.0).scenario();
    const NearestDistanceLaw law{sc.params.density_per_m2, sc.geometry.r_min};
    const double h2 = sc.geometry.h_d * sc.geometry.h_d;
    McConfig cfg;
    std::vector<double> nearest;
    PppRealization real;
    for (std::size_t i = 0; i < 10000; ++i) {
      Rng rng = trial_rng(kOracleSeed, i);
      sample_realization(sc.params, cfg.sim_radius_m, rng, real);
      double best = std::numeric_limits<double>::infinity();
      for (const Point2 &q : real.positions)
        best = std::min(best, q.x * q.x + q.y * q.y + h2);
      nearest.push_back(std::sqrt(best));
    }
    std::sort(nearest.begin(), nearest.end());
    const double n = static_cast<double>(nearest.size());
    double d = 0.0;
    for (std::size_t i = 0; i < nearest.size(); ++i) {
      const double f = law.cdf(nearest[i]);
      d = std::max({d, std::abs(f - i / n), std::abs(f - (i + 1) / n)});
    }
    const double critical = 1.358 / std::sqrt(n);
    checks.push_back({"serving-distance-ks", d < kKsFactor * critical, fmt("D=%.4f", d) + fmt(" crit=%.4f", critical)});
  }

  bool pass = true;
  std::string detail;
  for (const auto &c : checks) {
    pass = pass && c.pass;
    detail += c.name + (c.pass ? " ok[" : " FAILED[") + c.value + "] ";
  }
  report(7, "numerical self-consistency", pass, detail);
}

void criterion8() {
  bool pass = true;
  std::string detail;
  for (double h : {1.5, 40.0}) {
    ScenarioSettings ref = settings(h);
    ScenarioSettings reduced = settings(h);
    reduced.floor_db = kReducedFloorDb;
    const double t_ref = optimum(ref);
    const double t_red = optimum(reduced);
    double pre_ref = 0.0;
    double pre_red = 0.0;
    int n = 0;
    for (double tilt = kTiltLo; tilt < std::min(t_ref, t_red) - 1.0; tilt += 1.0) {
      ref.tilt_deg = tilt;
      reduced.tilt_deg = tilt;
      pre_ref += coverage(ref);
      pre_red += coverage(reduced);
      ++n;
    }
    pre_ref /= n;
    pre_red /= n;
    const bool right = t_red >= t_ref;
    const bool lower = pre_red < pre_ref;
    pass = pass && right && lower;
    detail += "h=" + fmt("%g", h) + ": optimum " + fmt("%.2f", t_ref) + " -> " + fmt("%.2f", t_red) +
              (right ? " ok" : " moved left") + ", pre-optimum mean " + fmt("%.4f", pre_ref) + " -> " +
              fmt("%.4f", pre_red) + (lower ? " ok" : " rose") + "; ";
  }
  report(8, "smaller sidelobe floor moves optimum right and lowers pre-optimum coverage", pass, detail);
  for (double floor_db : {25.0, 30.0}) {
    ScenarioSettings s = settings(1.5);
    s.floor_db = floor_db;
    ScenarioSettings a = settings(40.0);
    a.floor_db = floor_db;
    std::printf("  note: floor %g dB gives optimum %.2f (h=1.5), %.2f (h=40)\n", floor_db, optimum(s), optimum(a));
  }
}

template <class F>
void timed(const char *label, F &&f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  std::printf("  (%s took %.1f s)\n", label,
              std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
}

} // namespace

int main() {
  timed("criterion 1", criterion1);
  timed("criterion 2", criterion2);
  timed("criterion 3", criterion3);
  timed("criterion 4", criterion4);
  timed("criterion 5", criterion5);
  timed("criterion 6", criterion6);
  timed("criterion 7", criterion7);
  timed("criterion 8", criterion8);
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
