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

#include "aircov/analytic_engine.hpp"

#include "aircov/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <unordered_map>

namespace aircov {

namespace {

constexpr double pi = std::numbers::pi;

double binomial(int n, int k) {
  double b = 1.0;
  for (int i = 1; i <= k; ++i)
    b = b * (n - k + i) / i;
  return b;
}

double rising_factorial(int m, int j) {
  double r = 1.0;
  for (int i = 0; i < j; ++i)
    r *= m + i;
  return r;
}

} // namespace

double NearestDistanceLaw::pdf(double r) const {
  if (r < h_d_abs)
    return 0.0;
  return 2.0 * pi * density_per_m2 * r * std::exp(-density_per_m2 * pi * (r * r - h_d_abs * h_d_abs));
}

double NearestDistanceLaw::cdf(double r) const {
  if (r <= h_d_abs)
    return 0.0;
  return -std::expm1(-density_per_m2 * pi * (r * r - h_d_abs * h_d_abs));
}

double NearestDistanceLaw::truncation_radius(double tail_mass) const {
  return std::sqrt(h_d_abs * h_d_abs + std::log(1.0 / tail_mass) / (density_per_m2 * pi));
}

LaplaceExponent::LaplaceExponent(const Scenario &scenario, double serving_distance, QuadratureTolerance tol)
    : scenario_(&scenario), serving_distance_(serving_distance), tol_(tol), cuts_(scenario.geometry.breakpoints) {
  if (serving_distance < scenario.geometry.r_min * (1.0 - 1e-12))
    throw domain_error("LaplaceExponent: serving distance below minimum feasible distance");
}

QuadratureResult LaplaceExponent::derivative(double s, int j) const {
  const NetworkParams &p = scenario_->params;
  const int m = p.fading_m;
  if (j < 0 || j > m)
    throw std::invalid_argument("LaplaceExponent::derivative: order must be in [0, m]");
  if (s < 0.0)
    throw std::invalid_argument("LaplaceExponent::derivative: s must be >= 0");
  if (j == 0 && s == 0.0)
    return {};

  const double scale = 2.0 * pi * p.density_per_m2;
  const double md = m;
  const double alpha = p.path_loss_exp;
  const double sign = (j % 2 == 1) ? 1.0 : -1.0;
  const double coeff = rising_factorial(m, j);

  auto integrand = [&](double t) -> double {
    const double c = p.tx_power_w * scenario_->gain(t) * std::pow(t, -alpha);
    const double x = s * c;
    if (j == 0)
      return scale * -std::expm1(-md * std::log1p(x / md)) * t;
    const double w = 1.0 / (md + x);
    return scale * sign * coeff * std::pow(md * w, md) * std::pow(c * w, j) * t;
  };
  const double decay = j == 0 ? alpha - 1.0 : j * alpha - 1.0;
  // s^j eta^(j) is what enters the series, so the absolute tolerance applies to it.
  QuadratureTolerance tol = tol_;
  if (j > 0 && s > 0.0)
    tol.abs /= std::pow(s, j);
  return integrate_piecewise(integrand, serving_distance_, std::numeric_limits<double>::infinity(), cuts_,
                             decay, tol);
}

std::vector<double> LaplaceExponent::normalized_laplace_derivatives(double s, int k_max, double &eta_out) const {
  std::vector<double> eta(static_cast<std::size_t>(k_max) + 1);
  for (int j = 0; j <= k_max; ++j)
    eta[j] = derivative(s, j).value;
  eta_out = eta[0];

  std::vector<double> ell(static_cast<std::size_t>(k_max) + 1);
  ell[0] = 1.0;
  for (int k = 1; k <= k_max; ++k) {
    double acc = 0.0;
    for (int j = 0; j < k; ++j)
      acc += binomial(k - 1, j) * eta[k - j] * ell[j];
    ell[k] = -acc;
  }
  return ell;
}

double laplace_transform(const LaplaceExponent &exponent, double s) {
  return std::exp(-exponent.derivative(s, 0).value);
}

double laplace_exponent_derivative(const LaplaceExponent &exponent, double s, int j) {
  if (j < 1)
    throw std::invalid_argument("laplace_exponent_derivative: order must be >= 1");
  return exponent.derivative(s, j).value;
}

double laplace_derivative(const LaplaceExponent &exponent, double s, int k) {
  const int m = exponent.scenario().params.fading_m;
  if (k < 0 || k > m - 1)
    throw std::invalid_argument("laplace_derivative: order must be in [0, m - 1]");
  double eta = 0.0;
  const auto ell = exponent.normalized_laplace_derivatives(s, k, eta);
  return std::exp(-eta) * ell[k];
}

std::string_view to_string(Method m) { return m == Method::analytic ? "analytic" : "monte_carlo"; }

double evaluation_point(const Scenario &scenario, double r) {
  const NetworkParams &p = scenario.params;
  return p.fading_m * p.sir_threshold * std::pow(r, p.path_loss_exp) / (p.tx_power_w * scenario.gain(r));
}

CoverageResult coverage_probability(const Scenario &scenario, const QuadratureTolerance &tol) {
  const NetworkParams &p = scenario.params;
  const int m = p.fading_m;
  const NearestDistanceLaw law{p.density_per_m2, scenario.geometry.r_min};
  const double r_lo = scenario.geometry.r_min;
  const double r_hi = law.truncation_radius(1e-12);

  // Series terms for one serving distance, each already weighted by the
  // distance density. Cached so the per-k outer integrals share inner work.
  std::unordered_map<double, std::vector<double>> cache;
  auto terms_at = [&](double r) -> const std::vector<double> & {
    auto it = cache.find(r);
    if (it != cache.end())
      return it->second;
    std::vector<double> out(static_cast<std::size_t>(m), 0.0);
    const double density = law.pdf(r);
    if (density > 0.0) {
      const double s = evaluation_point(scenario, r);
      const LaplaceExponent exponent(scenario, std::max(r, r_lo), tol);
      double eta = 0.0;
      const auto ell = exponent.normalized_laplace_derivatives(s, m - 1, eta);
      double factor = 1.0; // (-s)^k / k!
      for (int k = 0; k < m; ++k) {
        if (k > 0)
          factor *= -s / k;
        const double magnitude = factor * ell[k];
        // (-s)^k L^(k) >= 0; evaluate in log space to survive exp(-eta) underflow.
        out[k] = magnitude > 0.0 ? std::exp(std::log(magnitude) - eta) * density : 0.0;
      }
    }
    return cache.emplace(r, std::move(out)).first->second;
  };

  CoverageResult result;
  result.method = Method::analytic;
  result.terms.assign(static_cast<std::size_t>(m), 0.0);
  QuadratureResult total;
  for (int k = 0; k < m; ++k) {
    auto integrand = [&](double r) { return terms_at(r)[k]; };
    const auto part = integrate_piecewise(integrand, r_lo, r_hi, scenario.geometry.breakpoints, 0.0, tol);
    result.terms[k] = part.value;
    total += part;
  }
  // Truncated tail of the distance law.
  total.abs_error += 1e-12;

  result.abs_error_estimate = total.abs_error;
  const double raw = total.value;
  if (raw < -total.abs_error || raw > 1.0 + total.abs_error)
    result.clamped = true;
  result.value = std::clamp(raw, 0.0, 1.0);
  return result;
}

} // namespace aircov
