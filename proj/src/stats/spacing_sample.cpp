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

#include "gpue/stats/spacing_sample.hpp"

#include <cmath>

#include "gpue/error.hpp"

namespace gpue::stats {

SpacingSample normalize_spacings(std::span<const double> raw) {
  if (raw.empty()) throw ValidationError("normalize_spacings: empty sample");
  double sum = 0.0;
  for (double v : raw) {
    if (!(v >= 0.0) || !std::isfinite(v)) throw ValidationError("normalize_spacings: spacings must be finite and non-negative");
    sum += v;
  }
  if (sum == 0.0) throw ValidationError("normalize_spacings: all spacings are zero");
  const double mean = sum / static_cast<double>(raw.size());
  SpacingSample out;
  out.values.reserve(raw.size());
  for (double v : raw) out.values.push_back(v / mean);
  double check = 0.0;
  for (double v : out.values) check += v;
  const double correction = static_cast<double>(out.values.size()) / check;
  for (double& v : out.values) v *= correction;
  out.mean = 1.0;
  out.raw_mean = mean;
  return out;
}

std::vector<double> nearest_neighbor_gaps(std::span<const double> ascending) {
  std::vector<double> gaps;
  if (ascending.size() < 2) return gaps;
  gaps.reserve(ascending.size() - 1);
  for (std::size_t i = 1; i < ascending.size(); ++i) gaps.push_back(ascending[i] - ascending[i - 1]);
  return gaps;
}

}  // namespace gpue::stats
