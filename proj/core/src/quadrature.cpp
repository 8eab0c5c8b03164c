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

#include "aircov/quadrature.hpp"

#include "aircov/errors.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_integration.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <mutex>
#include <string>

namespace aircov {

namespace {

struct WorkspaceDeleter {
  void operator()(gsl_integration_workspace *w) const { gsl_integration_workspace_free(w); }
};
using Workspace = std::unique_ptr<gsl_integration_workspace, WorkspaceDeleter>;

void disable_gsl_abort() {
  static std::once_flag once;
  std::call_once(once, [] { gsl_set_error_handler_off(); });
}

// QAGS frequently reports roundoff once it is already within a small multiple
// of the requested tolerance; only larger misses are hard failures.
constexpr double accept_factor = 1e3;

} // namespace

QuadratureResult integrate(IntegrandRef f, double a, double b, const QuadratureTolerance &tol) {
  if (a == b)
    return {};
  disable_gsl_abort();
  Workspace ws(gsl_integration_workspace_alloc(tol.max_intervals));
  gsl_function fn{f.trampoline(), f.object()};
  double value = 0.0;
  double err = 0.0;
  const int status = gsl_integration_qags(&fn, a, b, tol.abs, tol.rel, tol.max_intervals, ws.get(), &value, &err);
  if (!std::isfinite(value))
    throw quadrature_error("quadrature produced a non-finite value", value, err);
  if (status != GSL_SUCCESS) {
    const double target = std::max(tol.abs, tol.rel * std::abs(value));
    if (!(err <= accept_factor * target))
      throw quadrature_error(std::string("quadrature did not converge: ") + gsl_strerror(status), value, err);
  }
  return {value, err};
}

QuadratureResult integrate_to_infinity(IntegrandRef f, double a, double decay_power,
                                       const QuadratureTolerance &tol) {
  if (!(a > 0.0))
    throw std::invalid_argument("integrate_to_infinity: lower limit must be positive");
  if (!(decay_power > 1.0))
    throw std::invalid_argument("integrate_to_infinity: integrand must decay faster than 1/t");
  const double q = std::clamp(1.0 / (decay_power - 1.0), 1.0, 64.0);
  auto mapped = [&](double u) -> double {
    const double t = a * std::pow(u, -q);
    if (!std::isfinite(t))
      return 0.0;
    return f(t) * q * t / u;
  };
  return integrate(mapped, 0.0, 1.0, tol);
}

QuadratureResult integrate_piecewise(IntegrandRef f, double a, double b, std::span<const double> cuts,
                                     double decay_power, const QuadratureTolerance &tol) {
  QuadratureResult total;
  double lo = a;
  for (double c : cuts) {
    if (c <= lo || c >= b)
      continue;
    total += integrate(f, lo, c, tol);
    lo = c;
  }
  if (std::isinf(b))
    total += integrate_to_infinity(f, lo, decay_power, tol);
  else
    total += integrate(f, lo, b, tol);
  return total;
}

} // namespace aircov
