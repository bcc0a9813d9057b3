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

#include "srmac/quadrature.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace srmac {

namespace {

// Kronrod-15 abscissae/weights on [-1, 1] plus the embedded Gauss-7 weights.
const double kXgk[8] = {0.991455371120813, 0.949107912342759,
                        0.864864423359769, 0.741531185599394,
                        0.586087235467691, 0.405845151377397,
                        0.207784955007898, 0.000000000000000};
const double kWgk[8] = {0.022935322010529, 0.063092092629979,
                        0.104790010322250, 0.140653259715525,
                        0.169004726639267, 0.190350578064785,
                        0.204432940075298, 0.209482141084728};
const double kWg[4] = {0.129484966168870, 0.279705391489277,
                       0.381830050505119, 0.417959183673469};

struct Panel {
  double gauss;
  double kronrod;
};

Panel gk15(const std::function<double(double)>& f, double a, double b,
           long* evals) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double fv1[7], fv2[7];
  const double fc = f(c);
  *evals += 15;
  double resg = fc * kWg[3];
  double resk = fc * kWgk[7];
  for (int j = 0; j < 7; ++j) {
    const double x = h * kXgk[j];
    fv1[j] = f(c - x);
    fv2[j] = f(c + x);
    resk += kWgk[j] * (fv1[j] + fv2[j]);
  }
  for (int j = 0; j < 3; ++j) {
    const int jg = 2 * j + 1;
    resg += kWg[j] * (fv1[jg] + fv2[jg]);
  }
  return {resg * h, resk * h};
}

void adapt(const std::function<double(double)>& f, double a, double b,
           double tol, int depth, int max_depth, QuadResult* out) {
  long evals = 0;
  const Panel p = gk15(f, a, b, &evals);
  out->evals += evals;
  const double err = std::fabs(p.kronrod - p.gauss);
  if (err <= tol || depth >= max_depth) {
    out->value += p.kronrod;
    out->abs_error += err;
    if (depth >= max_depth && err > tol) out->converged = false;
    return;
  }
  const double c = 0.5 * (a + b);
  adapt(f, a, c, 0.5 * tol, depth + 1, max_depth, out);
  adapt(f, c, b, 0.5 * tol, depth + 1, max_depth, out);
}

}  // namespace

QuadResult integrate_adaptive(const std::function<double(double)>& f, double a,
                              double b, double rel_tol, double abs_tol,
                              int max_depth) {
  QuadResult out;
  out.converged = true;
  long evals = 0;
  const Panel coarse = gk15(f, a, b, &evals);
  out.evals = evals;
  const double tol =
      std::max(abs_tol, rel_tol * std::fabs(coarse.kronrod));
  out.evals = 0;
  adapt(f, a, b, tol, 0, max_depth, &out);
  return out;
}

const GaussHermite& GaussHermite::get(int order) {
  static std::mutex mu;
  static std::map<int, GaussHermite> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(order);
  if (it != cache.end()) return it->second;
  if (order < 1) throw std::invalid_argument("GaussHermite: order >= 1");

  // Golub-Welsch on the Jacobi matrix of the Hermite recurrence.
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(order, order);
  for (int k = 1; k < order; ++k) {
    const double off = std::sqrt(0.5 * k);
    J(k, k - 1) = off;
    J(k - 1, k) = off;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
  GaussHermite gh;
  gh.nodes.resize(order);
  gh.weights.resize(order);
  const double mu0 = std::sqrt(M_PI);  // integral of exp(-x^2)
  for (int k = 0; k < order; ++k) {
    gh.nodes[k] = es.eigenvalues()(k);
    const double v0 = es.eigenvectors()(0, k);
    gh.weights[k] = mu0 * v0 * v0;
  }
  auto [pos, ok] = cache.emplace(order, std::move(gh));
  return pos->second;
}

double gauss_hermite_normal_expectation(const std::function<double(double)>& f,
                                        int order) {
  const GaussHermite& gh = GaussHermite::get(order);
  // z = sqrt(2) x maps exp(-x^2) dx onto the N(0,1) density.
  const double inv_sqrt_pi = 0.5641895835477562869;
  double acc = 0.0;
  for (int k = 0; k < order; ++k)
    acc += gh.weights[k] * f(1.4142135623730950488 * gh.nodes[k]);
  return acc * inv_sqrt_pi;
}

}  // namespace srmac
