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

#include "aircov/monte_carlo.hpp"

#include "aircov/errors.hpp"
#include "aircov/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace aircov {

namespace {

constexpr double pi = std::numbers::pi;

// Mean base-station count of the reference disk (10 BS/km^2 over 5 km).
constexpr double reference_disk_count = 1.0e-5 * pi * 5000.0 * 5000.0;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

unsigned worker_count(const McConfig &cfg, std::size_t trials) {
  unsigned n = cfg.threads != 0 ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(trials, 1)));
}

// Runs body(begin, end, acc) over contiguous trial blocks on worker threads and
// merges the per-block accumulators in block order.
template <class Acc, class Body>
Acc run_blocks(std::size_t trials, unsigned workers, Body body) {
  std::vector<Acc> partial(workers);
  auto block = [&](unsigned w) {
    const std::size_t begin = trials * w / workers;
    const std::size_t end = trials * (w + 1) / workers;
    body(begin, end, partial[w]);
  };
  if (workers == 1) {
    block(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back(block, w);
  }
  Acc total{};
  for (const Acc &a : partial)
    total += a;
  return total;
}

struct CoverageCounts {
  std::size_t covered = 0;
  std::size_t resampled = 0;
  CoverageCounts &operator+=(const CoverageCounts &o) {
    covered += o.covered;
    resampled += o.resampled;
    return *this;
  }
};

struct MomentSums {
  double sum = 0.0;
  double sum_sq = 0.0;
  MomentSums &operator+=(const MomentSums &o) {
    sum += o.sum;
    sum_sq += o.sum_sq;
    return *this;
  }
};

// Received power P_T G(r) g r^-alpha as a function of squared 3D distance.
// Same formula as vertical_gain_linear, with the floor region resolved from the
// distance breakpoints so most far-away stations skip the arcsine.
class PowerEvaluator {
public:
  explicit PowerEvaluator(const Scenario &scenario)
      : h_d_(scenario.geometry.h_d), tilt_(scenario.pattern.tilt_deg()),
        inv_bw_(1.0 / scenario.pattern.beamwidth_deg()), floor_db_(scenario.pattern.floor_db()),
        floor_lin_(scenario.pattern.floor_linear()), tx_(scenario.params.tx_power_w),
        half_alpha_(0.5 * scenario.params.path_loss_exp) {
    const double twice = 2.0 * scenario.params.path_loss_exp;
    if (twice == std::round(twice) && twice <= 16.0)
      twice_alpha_int_ = static_cast<int>(twice);
    // Segments between consecutive breakpoints are entirely floor or entirely
    // main lobe; classify each by its midpoint.
    const double r_min = scenario.geometry.r_min;
    double lo = r_min;
    for (double b : scenario.geometry.breakpoints) {
      cuts2_.push_back(b * b);
      floor_segment_.push_back(b > lo && classify(0.5 * (lo + b)));
      lo = std::max(lo, b);
    }
    floor_segment_.push_back(classify(2.0 * lo + 1.0));
  }

  double gain(double r2) const {
    std::size_t k = 0;
    while (k < cuts2_.size() && r2 >= cuts2_[k])
      ++k;
    if (floor_segment_[k])
      return floor_lin_;
    const double r = std::sqrt(r2);
    return gain_from_angle(-std::asin(std::clamp(h_d_ / r, -1.0, 1.0)) * (180.0 / pi));
  }

  double path_loss(double r2) const {
    if (twice_alpha_int_ > 0) {
      // alpha = n / 2: r^-alpha = r^-(n div 2) * r^-1/2 for odd n.
      const double r = std::sqrt(r2);
      double v = 1.0;
      for (int k = 0; k < twice_alpha_int_ / 2; ++k)
        v /= r;
      if (twice_alpha_int_ % 2 == 1)
        v /= std::sqrt(r);
      return v;
    }
    return std::exp(-half_alpha_ * std::log(r2));
  }

  double power(double r2, double fading) const { return tx_ * gain(r2) * fading * path_loss(r2); }

private:
  bool classify(double r) const { return gain_from_angle(elevation_angle(h_d_, r)) == floor_lin_; }

  double gain_from_angle(double theta_deg) const {
    const double x = (theta_deg - tilt_) * inv_bw_;
    const double att = 12.0 * x * x;
    if (att >= floor_db_)
      return floor_lin_;
    return std::exp(-att * (std::numbers::ln10 / 10.0));
  }

  double h_d_;
  double tilt_;
  double inv_bw_;
  double floor_db_;
  double floor_lin_;
  double tx_;
  double half_alpha_;
  int twice_alpha_int_ = 0;
  std::vector<double> cuts2_;
  std::vector<bool> floor_segment_;
};

} // namespace

Rng trial_rng(std::uint64_t seed, std::uint64_t trial) {
  return Rng(splitmix64(splitmix64(seed) ^ splitmix64(trial + 0x632be59bd9b4e019ULL)));
}

double effective_radius(const NetworkParams &params, const McConfig &cfg) {
  const double needed = std::sqrt(reference_disk_count / (params.density_per_m2 * pi));
  return std::max(cfg.sim_radius_m, needed);
}

void sample_realization(const NetworkParams &params, double radius_m, Rng &rng, PppRealization &out) {
  const double mean = params.density_per_m2 * pi * radius_m * radius_m;
  std::poisson_distribution<std::size_t> count(mean);

  const std::size_t n = count(rng);
  out.positions.resize(n);
  out.gains.resize(n);
  // Both coordinates come from one 64-bit draw (32 bits each); rejection
  // sampling inside the unit disk.
  constexpr double to_unit = 2.0 / 4294967296.0;
  for (std::size_t i = 0; i < n; ++i) {
    double x = 0.0;
    double y = 0.0;
    do {
      const std::uint64_t bits = rng();
      x = (static_cast<double>(bits >> 32) + 0.5) * to_unit - 1.0;
      y = (static_cast<double>(bits & 0xffffffffULL) + 0.5) * to_unit - 1.0;
    } while (x * x + y * y > 1.0);
    out.positions[i] = {x * radius_m, y * radius_m};
  }

  const int m = params.fading_m;
  if (m <= 8) {
    // Gamma(m, 1/m) with integer m is the mean of m unit exponentials:
    // -log(U_1 ... U_m) / m, uniforms on (0, 1) with 53-bit resolution.
    constexpr double to_open = 1.0 / 9007199254740992.0;
    for (std::size_t i = 0; i < n; ++i) {
      double prod = 1.0;
      for (int k = 0; k < m; ++k)
        prod *= (static_cast<double>(rng() >> 11) + 0.5) * to_open;
      out.gains[i] = -std::log(prod) / m;
    }
  } else {
    std::gamma_distribution<double> fading(m, 1.0 / m);
    for (std::size_t i = 0; i < n; ++i)
      out.gains[i] = fading(rng);
  }
}

PppRealization sample_realization(const NetworkParams &params, const McConfig &cfg, Rng &rng) {
  PppRealization out;
  sample_realization(params, cfg.sim_radius_m, rng, out);
  return out;
}

double far_field_interference(const Scenario &scenario, double radius_m) {
  const NetworkParams &p = scenario.params;
  const double h = scenario.geometry.h_d;
  const double start = std::sqrt(radius_m * radius_m + h * h);
  // Ground ring d dd equals t dt in 3D distance.
  auto integrand = [&](double t) {
    return 2.0 * pi * p.density_per_m2 * p.tx_power_w * scenario.gain(t) * std::pow(t, 1.0 - p.path_loss_exp);
  };
  return integrate_piecewise(integrand, start, std::numeric_limits<double>::infinity(), scenario.geometry.breakpoints,
                             p.path_loss_exp - 1.0)
      .value;
}

double sir_realization(const PppRealization &real, const Scenario &scenario, double extra_interference) {
  const std::size_t n = real.positions.size();
  if (n < 2 || real.gains.size() != n)
    throw std::invalid_argument("sir_realization: need at least two base stations with matching gains");
  const double h2 = scenario.geometry.h_d * scenario.geometry.h_d;

  std::size_t serving = 0;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    const auto &q = real.positions[i];
    const double d2 = q.x * q.x + q.y * q.y;
    if (d2 < best) {
      best = d2;
      serving = i;
    }
  }

  const PowerEvaluator eval(scenario);
  double signal = 0.0;
  double interference = extra_interference;
  for (std::size_t i = 0; i < n; ++i) {
    const auto &q = real.positions[i];
    const double pw = eval.power(q.x * q.x + q.y * q.y + h2, real.gains[i]);
    if (i == serving)
      signal = pw;
    else
      interference += pw;
  }
  return signal / interference;
}

double wilson_half_width(std::size_t successes, std::size_t n, double z) {
  if (n == 0)
    return 1.0;
  const double nd = static_cast<double>(n);
  const double p = static_cast<double>(successes) / nd;
  const double z2 = z * z;
  return z / (1.0 + z2 / nd) * std::sqrt(p * (1.0 - p) / nd + z2 / (4.0 * nd * nd));
}

CoverageResult estimate_coverage(const Scenario &scenario, const McConfig &cfg) {
  if (cfg.trials < 100)
    throw invalid_scenario("trials", "Monte Carlo coverage needs at least 100 trials");
  const double radius = effective_radius(scenario.params, cfg);
  const double far = cfg.far_field_mean ? far_field_interference(scenario, radius) : 0.0;
  const double threshold = scenario.params.sir_threshold;

  const auto counts = run_blocks<CoverageCounts>(
      cfg.trials, worker_count(cfg, cfg.trials), [&](std::size_t begin, std::size_t end, CoverageCounts &acc) {
        PppRealization real;
        for (std::size_t t = begin; t < end; ++t) {
          Rng rng = trial_rng(cfg.seed, t);
          sample_realization(scenario.params, radius, rng, real);
          while (real.positions.size() < 2) {
            ++acc.resampled;
            sample_realization(scenario.params, radius, rng, real);
          }
          if (sir_realization(real, scenario, far) >= threshold)
            ++acc.covered;
        }
      });

  CoverageResult result;
  result.method = Method::monte_carlo;
  result.trials = cfg.trials;
  result.covered = counts.covered;
  result.resampled = counts.resampled;
  const double n = static_cast<double>(cfg.trials);
  result.value = static_cast<double>(counts.covered) / n;
  result.std_error = std::sqrt(result.value * (1.0 - result.value) / n);
  result.abs_error_estimate = wilson_half_width(counts.covered, cfg.trials);
  return result;
}

LaplaceEstimate estimate_laplace_functional(const Scenario &scenario, double serving_r, double s,
                                            const McConfig &cfg) {
  if (s < 0.0)
    throw std::invalid_argument("estimate_laplace_functional: s must be >= 0");
  if (cfg.trials < 1)
    throw invalid_scenario("trials", "need at least one trial");
  LaplaceEstimate est;
  est.trials = cfg.trials;
  if (s == 0.0) {
    est.mean = 1.0;
    return est;
  }
  const double radius = effective_radius(scenario.params, cfg);
  const double far = cfg.far_field_mean ? far_field_interference(scenario, radius) : 0.0;
  const double h2 = scenario.geometry.h_d * scenario.geometry.h_d;
  const double exclusion2 = serving_r * serving_r;
  const PowerEvaluator eval(scenario);

  const auto sums = run_blocks<MomentSums>(
      cfg.trials, worker_count(cfg, cfg.trials), [&](std::size_t begin, std::size_t end, MomentSums &acc) {
        PppRealization real;
        for (std::size_t t = begin; t < end; ++t) {
          Rng rng = trial_rng(cfg.seed, t);
          sample_realization(scenario.params, radius, rng, real);
          double interference = far;
          for (std::size_t i = 0; i < real.positions.size(); ++i) {
            const auto &q = real.positions[i];
            const double r2 = q.x * q.x + q.y * q.y + h2;
            if (r2 <= exclusion2)
              continue;
            interference += eval.power(r2, real.gains[i]);
          }
          const double v = std::exp(-s * interference);
          acc.sum += v;
          acc.sum_sq += v * v;
        }
      });
  const double n = static_cast<double>(cfg.trials);
  est.mean = sums.sum / n;
  const double var = std::max(0.0, sums.sum_sq / n - est.mean * est.mean);
  est.std_error = std::sqrt(var / n);
  return est;
}

} // namespace aircov
