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

#include "gpue/stats/histogram.hpp"

#include <cmath>

#include "gpue/error.hpp"

namespace gpue::stats {

namespace {

void refresh_density(Histogram& h) {
  const std::uint64_t total = h.in_range();
  h.density.assign(h.counts.size(), 0.0);
  if (total == 0) return;
  for (std::size_t i = 0; i < h.counts.size(); ++i)
    h.density[i] = static_cast<double>(h.counts[i]) / (static_cast<double>(total) * (h.edges[i + 1] - h.edges[i]));
}

}  // namespace

std::uint64_t Histogram::in_range() const {
  std::uint64_t total = 0;
  for (auto c : counts) total += c;
  return total;
}

Histogram make_histogram(std::span<const double> values, double lo, double hi, std::size_t bins) {
  if (bins == 0) throw ValidationError("make_histogram: need at least one bin");
  if (!(hi > lo)) throw ValidationError("make_histogram: require hi > lo");
  Histogram h;
  h.edges.resize(bins + 1);
  const double width = (hi - lo) / static_cast<double>(bins);
  for (std::size_t i = 0; i <= bins; ++i) h.edges[i] = lo + width * static_cast<double>(i);
  h.edges.back() = hi;
  h.counts.assign(bins, 0);
  for (double v : values) {
    if (v < lo) {
      ++h.underflow;
      continue;
    }
    if (!(v < hi)) {
      ++h.overflow;
      continue;
    }
    auto idx = static_cast<std::size_t>((v - lo) / width);
    if (idx >= bins) idx = bins - 1;
    // Float division can land one bin off at an edge.
    if (v < h.edges[idx] && idx > 0) --idx;
    if (v >= h.edges[idx + 1] && idx + 1 < bins) ++idx;
    ++h.counts[idx];
  }
  refresh_density(h);
  return h;
}

Histogram merge_histograms(const Histogram& lhs, const Histogram& rhs) {
  if (lhs.edges != rhs.edges) throw ValidationError("merge_histograms: bin edges differ");
  Histogram out = lhs;
  for (std::size_t i = 0; i < out.counts.size(); ++i) out.counts[i] += rhs.counts[i];
  out.underflow += rhs.underflow;
  out.overflow += rhs.overflow;
  refresh_density(out);
  return out;
}

}  // namespace gpue::stats
