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

#include "srmac/monotone_curve.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "srmac/errors.hpp"

namespace srmac {

MonotoneCurve::MonotoneCurve(std::vector<double> grid,
                             std::vector<double> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
  if (grid_.size() != values_.size() || grid_.size() < 2)
    throw std::invalid_argument("MonotoneCurve: need >= 2 matching points");
  for (std::size_t i = 1; i < grid_.size(); ++i) {
    if (!(grid_[i] > grid_[i - 1]))
      throw std::invalid_argument("MonotoneCurve: grid must be ascending");
    if (!std::isfinite(values_[i]) || !std::isfinite(values_[i - 1]))
      throw std::invalid_argument("MonotoneCurve: non-finite value");
  }
  increasing_ = values_[1] > values_[0];
  for (std::size_t i = 1; i < values_.size(); ++i) {
    const bool up = values_[i] > values_[i - 1];
    if (up != increasing_)
      throw std::invalid_argument("MonotoneCurve: values not strictly monotone");
  }
}

double MonotoneCurve::evaluate(double x) const {
  if (x <= grid_.front()) return values_.front();
  if (x >= grid_.back()) return values_.back();
  const auto it = std::upper_bound(grid_.begin(), grid_.end(), x);
  const std::size_t i = static_cast<std::size_t>(it - grid_.begin());
  const double t = (x - grid_[i - 1]) / (grid_[i] - grid_[i - 1]);
  return values_[i - 1] + t * (values_[i] - values_[i - 1]);
}

double MonotoneCurve::invert(double y) const {
  const double ylo = increasing_ ? values_.front() : values_.back();
  const double yhi = increasing_ ? values_.back() : values_.front();
  if (!(y >= ylo && y <= yhi)) {
    std::ostringstream os;
    os << "MonotoneCurve::invert: target " << y << " outside tabulated range ["
       << ylo << ", " << yhi << "]";
    throw numerical_error(os.str());
  }
  // Binary search for the bracketing segment, then solve the segment exactly.
  std::size_t lo = 0, hi = grid_.size() - 1;
  while (hi - lo > 1) {
    const std::size_t mid = (lo + hi) / 2;
    const bool left = increasing_ ? (values_[mid] >= y) : (values_[mid] <= y);
    if (left)
      hi = mid;
    else
      lo = mid;
  }
  const double v0 = values_[lo], v1 = values_[hi];
  if (v1 == v0) return grid_[lo];
  const double t = (y - v0) / (v1 - v0);
  return grid_[lo] + t * (grid_[hi] - grid_[lo]);
}

std::vector<double> repair_strictly_decreasing(std::vector<double> values,
                                               double tilt) {
  const std::size_t n = values.size();
  if (n < 2) return values;
  // PAV for a nonincreasing fit: run PAV for nondecreasing on the negated
  // sequence.
  std::vector<double> level(n), weight(n);
  std::vector<std::size_t> count(n);
  std::size_t blocks = 0;
  for (std::size_t i = 0; i < n; ++i) {
    level[blocks] = -values[i];
    weight[blocks] = 1.0;
    count[blocks] = 1;
    ++blocks;
    while (blocks > 1 && level[blocks - 2] > level[blocks - 1]) {
      const double w = weight[blocks - 2] + weight[blocks - 1];
      level[blocks - 2] =
          (level[blocks - 2] * weight[blocks - 2] +
           level[blocks - 1] * weight[blocks - 1]) /
          w;
      weight[blocks - 2] = w;
      count[blocks - 2] += count[blocks - 1];
      --blocks;
    }
  }
  std::size_t pos = 0;
  for (std::size_t b = 0; b < blocks; ++b)
    for (std::size_t j = 0; j < count[b]; ++j) values[pos++] = -level[b];
  // Break exact ties so the result is strictly decreasing.
  const double scale = std::max(std::fabs(values.front()), 1.0);
  for (std::size_t i = 1; i < n; ++i) {
    const double cap = values[i - 1] - tilt * scale;
    if (values[i] >= cap) values[i] = cap;
  }
  return values;
}

}  // namespace srmac
