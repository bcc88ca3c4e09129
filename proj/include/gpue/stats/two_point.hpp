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

#ifndef GPUE_STATS_TWO_POINT_HPP_
#define GPUE_STATS_TWO_POINT_HPP_

#include <cstddef>
#include <span>
#include <vector>

namespace gpue::stats {

struct TwoPointEstimate {
  std::vector<double> lags;       // bin centers
  std::vector<double> r2;         // estimated pair correlation
  std::vector<double> reference;  // 1 - (sin(pi r)/(pi r))^2 at the bin centers
  double bin_width = 0.0;
};

// 1 - (sin(pi r) / (pi r))^2, with the r -> 0 limit 0.
double pair_correlation_reference(double r);

// Pair correlation of an unfolded (unit mean gap) ascending sequence.
//
// All ordered pairs i < j with x_j - x_i < lag_max are binned. Reference
// points are restricted to x_i <= x_last - lag_max so each sees a full
// window; counts are divided by (reference points * density * bin width), so
// an uncorrelated sequence gives r2 ≈ 1. ValidationError below 100 points.
TwoPointEstimate two_point_correlation(std::span<const double> ordinates, double lag_max, std::size_t bins);

// Pools several independent sequences (e.g. one per sampled spectrum).
TwoPointEstimate two_point_correlation(std::span<const std::vector<double>> sequences, double lag_max,
                                       std::size_t bins);

// mean over bins of (r2 - reference)^2
double mean_square_deviation(const TwoPointEstimate& estimate);
// The same for the flat Poisson line r2 = 1.
double poisson_mean_square_deviation(const TwoPointEstimate& estimate);

}  // namespace gpue::stats

#endif  // GPUE_STATS_TWO_POINT_HPP_
