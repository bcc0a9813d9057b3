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

#include <vector>

namespace srmac {

/// A tabulated, strictly monotone scalar function with piecewise-linear
/// interpolation and guaranteed-bracket functional inversion. Evaluation
/// outside the grid clamps to the boundary values; inversion requires the
/// target ordinate to lie within the tabulated range.
class MonotoneCurve {
 public:
  /// grid must be strictly ascending; values strictly monotone.
  MonotoneCurve(std::vector<double> grid, std::vector<double> values);

  double evaluate(double x) const;

  /// Returns x with evaluate(x) == y (exact per-segment linear solve).
  /// Throws numerical_error if y is outside the tabulated range.
  double invert(double y) const;

  bool increasing() const { return increasing_; }
  double x_min() const { return grid_.front(); }
  double x_max() const { return grid_.back(); }
  double y_at_x_min() const { return values_.front(); }
  double y_at_x_max() const { return values_.back(); }
  const std::vector<double>& grid() const { return grid_; }
  const std::vector<double>& values() const { return values_; }

 private:
  std::vector<double> grid_;
  std::vector<double> values_;
  bool increasing_;
};

/// Pool-adjacent-violators projection onto nonincreasing sequences,
/// followed by a tiny tilt so the result is strictly decreasing. Used to
/// repair Monte Carlo estimates of decreasing curves before tabulation.
std::vector<double> repair_strictly_decreasing(std::vector<double> values,
                                               double tilt = 1e-15);

}  // namespace srmac
