// Copyright 2026 The gpue-lab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gpue/stats/ks.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "gpue/error.hpp"

namespace gpue::stats {

KsReport ks_distance(std::span<const double> sample, const Cdf& cdf, double coefficient) {
  if (sample.empty()) throw ValidationError("ks_distance: empty sample");
  std::vector<double> sorted(sample.begin(), sample.end());
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double f = cdf(sorted[i]);
    const double above = static_cast<double>(i + 1) / n - f;
    const double below = f - static_cast<double>(i) / n;
    d = std::max({d, above, below});
  }
  KsReport report;
  report.statistic = d;
  report.n = sorted.size();
  report.threshold = coefficient / std::sqrt(n);
  report.pass = d < report.threshold;
  return report;
}

KsReport ks_distance(const SpacingSample& sample, const Cdf& cdf, double coefficient) {
  return ks_distance(std::span<const double>(sample.values), cdf, coefficient);
}

double sup_norm_diff(const std::function<double(double)>& f1, const std::function<double(double)>& f2,
                     double grid_max, std::size_t grid_points) {
  if (grid_points < 2) throw ValidationError("sup_norm_diff: need at least two grid points");
  if (!(grid_max > 0.0)) throw ValidationError("sup_norm_diff: grid_max must be positive");
  double worst = 0.0;
  for (std::size_t i = 0; i < grid_points; ++i) {
    const double x = grid_max * static_cast<double>(i) / static_cast<double>(grid_points - 1);
    worst = std::max(worst, std::abs(f1(x) - f2(x)));
  }
  return worst;
}

}  // namespace gpue::stats
