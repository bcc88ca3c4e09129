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

#ifndef GPUE_STATS_SPACING_SAMPLE_HPP_
#define GPUE_STATS_SPACING_SAMPLE_HPP_

#include <span>
#include <vector>

namespace gpue::stats {

struct SpacingSample {
  std::vector<double> values;
  double mean = 0.0;      // mean of values
  double raw_mean = 0.0;  // mean of the input before rescaling
};

// Divides every value by the sample mean, so the result has mean 1.
// ValidationError on empty, negative, non-finite or all-zero input.
SpacingSample normalize_spacings(std::span<const double> raw);

// Differences of consecutive entries of an ascending sequence.
std::vector<double> nearest_neighbor_gaps(std::span<const double> ascending);

}  // namespace gpue::stats

#endif  // GPUE_STATS_SPACING_SAMPLE_HPP_
