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

#include <utility>

namespace srmac {

/// Standard normal CDF.
double norm_cdf(double x);

/// log of the standard normal CDF, accurate deep into the left tail
/// (uses the asymptotic erfc expansion below x ~ -20).
double log_norm_cdf(double x);

/// Inverse standard normal CDF (Acklam's rational approximation with one
/// Halley refinement step; ~1e-15 relative accuracy).
double norm_quantile(double p);

/// Regularized incomplete beta function I_x(a, b).
double betainc(double a, double b, double x);

/// Exact (Clopper-Pearson) two-sided binomial confidence interval for k
/// successes out of n at confidence 1 - alpha. Returns {lo, hi}.
std::pair<double, double> clopper_pearson(long long k, long long n,
                                          double alpha = 0.05);

}  // namespace srmac
