// SPDX-License-Identifier: Apache-2.0
//
// srmac — sparse regression codes over MIMO multiple-access channels
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

#include <functional>
#include <vector>

namespace srmac {

struct QuadResult {
  double value = 0.0;
  double abs_error = 0.0;
  long evals = 0;
  bool converged = false;
};

/// Adaptive Gauss-Kronrod (G7/K15) integration of f over [a, b].
QuadResult integrate_adaptive(const std::function<double(double)>& f, double a,
                              double b, double rel_tol = 1e-6,
                              double abs_tol = 1e-12, int max_depth = 48);

/// Gauss-Hermite nodes/weights for integrals of the form
/// integral f(x) exp(-x^2) dx ~ sum w_i f(x_i); computed by Golub-Welsch
/// and cached per order.
struct GaussHermite {
  std::vector<double> nodes;
  std::vector<double> weights;
  static const GaussHermite& get(int order);
};

/// E_{z ~ N(0,1)}[f(z)] by Gauss-Hermite quadrature.
double gauss_hermite_normal_expectation(const std::function<double(double)>& f,
                                        int order);

}  // namespace srmac
