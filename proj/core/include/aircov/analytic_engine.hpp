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
#include "aircov/quadrature.hpp"

#include <cstddef>
#include <string_view>
#include <vector>

namespace aircov {

// Law of the 3D distance to the nearest base station of a planar PPP seen
// from a user at height difference h_d: f(r) = 2 pi lambda r exp(-lambda pi (r^2 - h_d^2)), r >= |h_d|.
struct NearestDistanceLaw {
  double density_per_m2 = 0.0;
  double h_d_abs = 0.0;

  double pdf(double r) const;
  double cdf(double r) const;
  // Radius beyond which the remaining probability mass is below tail_mass.
  double truncation_radius(double tail_mass = 1e-12) const;
};

inline double nearest_distance_pdf(const NearestDistanceLaw &law, double r) { return law.pdf(r); }

// Exponent eta(s) of the interference Laplace transform L_I(s) = exp(-eta(s))
// for interferers beyond `serving_distance`:
//
//   eta(s) = 2 pi lambda int_r^inf (1 - (m / (m + s c(t)))^m) t dt,   c(t) = P_T G(t) t^-alpha
//
// The integral is split at every gain breakpoint beyond r.
class LaplaceExponent {
public:
  LaplaceExponent(const Scenario &scenario, double serving_distance, QuadratureTolerance tol = {});

  const Scenario &scenario() const { return *scenario_; }
  double serving_distance() const { return serving_distance_; }

  // j-th derivative in s, 0 <= j <= m. j = 0 is eta itself.
  QuadratureResult derivative(double s, int j) const;

  // L^(k)(s) / L(s) for k = 0..k_max, from the Leibniz recurrence on exp(-eta).
  // Returns the exponent eta(s) through `eta_out` so callers can rescale.
  std::vector<double> normalized_laplace_derivatives(double s, int k_max, double &eta_out) const;

private:
  const Scenario *scenario_;
  double serving_distance_;
  QuadratureTolerance tol_;
  std::vector<double> cuts_;
};

// L_I(s) = exp(-eta(s)), in (0, 1].
double laplace_transform(const LaplaceExponent &exponent, double s);

// eta^(j)(s), 1 <= j <= m, by differentiating under the integral sign.
double laplace_exponent_derivative(const LaplaceExponent &exponent, double s, int j);

// d^k L_I / ds^k, 0 <= k <= m - 1.
double laplace_derivative(const LaplaceExponent &exponent, double s, int k);

enum class Method { analytic, monte_carlo };

std::string_view to_string(Method m);

struct CoverageResult {
  double value = 0.0;
  // Quadrature error bound (analytic) or 95% Wilson half-width (Monte Carlo).
  double abs_error_estimate = 0.0;
  Method method = Method::analytic;
  // Analytic: contribution of each series term k = 0..m-1.
  std::vector<double> terms;
  // Raw value fell outside [0, 1] by more than the error estimate.
  bool clamped = false;

  // Monte Carlo diagnostics.
  std::size_t trials = 0;
  std::size_t covered = 0;
  std::size_t resampled = 0;
  double std_error = 0.0;
};

// Evaluation point of the Laplace derivatives for serving distance r:
// s*(r) = m beta r^alpha / (P_T G(r)).
double evaluation_point(const Scenario &scenario, double r);

// Coverage probability P(SIR >= beta) from the Gamma-CCDF series
//
//   P = sum_{k<m} E_r[ (-s*)^k / k! * L^(k)(s*) ],
//
// averaged over the nearest-distance law and split at the gain breakpoints.
CoverageResult coverage_probability(const Scenario &scenario, const QuadratureTolerance &tol = {});

} // namespace aircov
