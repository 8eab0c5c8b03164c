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

#include <cstddef>
#include <span>
#include <type_traits>
#include <utility>

namespace aircov {

struct QuadratureTolerance {
  double abs = 1e-9;
  double rel = 1e-7;
  std::size_t max_intervals = 2000;
};

struct QuadratureResult {
  double value = 0.0;
  double abs_error = 0.0;

  QuadratureResult &operator+=(const QuadratureResult &o) {
    value += o.value;
    abs_error += o.abs_error;
    return *this;
  }
};

// Non-owning reference to a callable double(double). The referenced callable
// must outlive the call it is passed to.
class IntegrandRef {
public:
  template <class F, class = std::enable_if_t<!std::is_same_v<std::decay_t<F>, IntegrandRef>>>
  IntegrandRef(F &&f) // NOLINT(google-explicit-constructor)
      : obj_(const_cast<void *>(static_cast<const void *>(&f))),
        call_([](double x, void *o) -> double { return (*static_cast<std::remove_reference_t<F> *>(o))(x); }) {}

  double operator()(double x) const { return call_(x, obj_); }

  void *object() const { return obj_; }
  double (*trampoline() const)(double, void *) { return call_; }

private:
  void *obj_;
  double (*call_)(double, void *);
};

// Adaptive Gauss-Kronrod (QUADPACK QAGS) over a finite interval [a, b].
// Throws quadrature_error when the tolerance cannot be met.
QuadratureResult integrate(IntegrandRef f, double a, double b, const QuadratureTolerance &tol = {});

// Integral over [a, inf) of a function decaying like t^-p with p > 1. Maps
// t = a * u^-q, q = 1 / (p - 1), so the transformed integrand stays bounded
// at u -> 0. Requires a > 0.
QuadratureResult integrate_to_infinity(IntegrandRef f, double a, double decay_power,
                                       const QuadratureTolerance &tol = {});

// Sum of integrals over [a, b] split at every cut strictly inside (a, b).
// `b` may be +infinity, in which case the last piece uses integrate_to_infinity.
QuadratureResult integrate_piecewise(IntegrandRef f, double a, double b, std::span<const double> cuts,
                                     double decay_power, const QuadratureTolerance &tol = {});

} // namespace aircov
