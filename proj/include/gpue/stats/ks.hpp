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

#ifndef GPUE_STATS_KS_HPP_
#define GPUE_STATS_KS_HPP_

#include <cstddef>
#include <functional>
#include <span>

#include "gpue/stats/spacing_sample.hpp"

namespace gpue::stats {

// Asymptotic one-sample Kolmogorov critical value coefficient at the 0.1%
// level: reject when sqrt(n) D_n >= 1.949.
inline constexpr double kKsCoefficient001 = 1.949;

struct KsReport {
  double statistic = 0.0;
  std::size_t n = 0;
  double threshold = 0.0;
  bool pass = false;  // statistic < threshold
};

using Cdf = std::function<double(double)>;

// sup_x |F_n(x) - cdf(x)| over the sorted sample, threshold = coefficient/sqrt(n).
// ValidationError on an empty sample.
KsReport ks_distance(std::span<const double> sample, const Cdf& cdf, double coefficient = kKsCoefficient001);
KsReport ks_distance(const SpacingSample& sample, const Cdf& cdf, double coefficient = kKsCoefficient001);

// max |f1 - f2| on the uniform grid of grid_points nodes over [0, grid_max].
double sup_norm_diff(const std::function<double(double)>& f1, const std::function<double(double)>& f2,
                     double grid_max, std::size_t grid_points);

}  // namespace gpue::stats

#endif  // GPUE_STATS_KS_HPP_
