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

#ifndef GPUE_STATS_HISTOGRAM_HPP_
#define GPUE_STATS_HISTOGRAM_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace gpue::stats {

// Uniform-bin histogram. density is normalized over the in-range counts, so
// sum(density * width) = 1 whenever any value landed in range; values outside
// [edges.front(), edges.back()) are tallied in underflow/overflow.
struct Histogram {
  std::vector<double> edges;
  std::vector<std::uint64_t> counts;
  std::vector<double> density;
  std::uint64_t underflow = 0;
  std::uint64_t overflow = 0;

  std::size_t bins() const { return counts.size(); }
  double bin_lo(std::size_t i) const { return edges[i]; }
  double bin_hi(std::size_t i) const { return edges[i + 1]; }
  double bin_center(std::size_t i) const { return 0.5 * (edges[i] + edges[i + 1]); }
  std::uint64_t in_range() const;
};

inline constexpr std::size_t kDefaultBins = 60;
inline constexpr double kDefaultHistogramMax = 4.0;

Histogram make_histogram(std::span<const double> values, double lo = 0.0, double hi = kDefaultHistogramMax,
                         std::size_t bins = kDefaultBins);

// Sum of two histograms over identical edges; associative and commutative.
Histogram merge_histograms(const Histogram& lhs, const Histogram& rhs);

}  // namespace gpue::stats

#endif  // GPUE_STATS_HISTOGRAM_HPP_
