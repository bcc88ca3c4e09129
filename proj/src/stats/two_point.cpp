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

#include "gpue/stats/two_point.hpp"

#include <cmath>
#include <numbers>

#include "gpue/error.hpp"

namespace gpue::stats {

double pair_correlation_reference(double r) {
  const double x = std::numbers::pi * r;
  if (std::abs(x) < 1e-4) return x * x / 3.0;
  const double sinc = std::sin(x) / x;
  return 1.0 - sinc * sinc;
}

TwoPointEstimate two_point_correlation(std::span<const std::vector<double>> sequences, double lag_max,
                                       std::size_t bins) {
  if (!(lag_max > 0.0)) throw ValidationError("two_point_correlation: lag_max must be positive");
  if (bins == 0) throw ValidationError("two_point_correlation: need at least one bin");
  const double width = lag_max / static_cast<double>(bins);
  std::vector<double> counts(bins, 0.0);
  double exposure = 0.0;  // sum over sequences of reference points * density

  for (const auto& x : sequences) {
    if (x.size() < 100) throw ValidationError("two_point_correlation: need at least 100 ordinates per sequence");
    for (std::size_t i = 1; i < x.size(); ++i)
      if (!(x[i] >= x[i - 1])) throw ValidationError("two_point_correlation: ordinates must be ascending");
    const double span = x.back() - x.front();
    if (!(span > lag_max)) throw ValidationError("two_point_correlation: sequence shorter than lag window");
    const double density = static_cast<double>(x.size() - 1) / span;
    const double last_ref = x.back() - lag_max;
    std::size_t refs = 0;
    for (std::size_t i = 0; i < x.size() && x[i] <= last_ref; ++i) {
      ++refs;
      for (std::size_t j = i + 1; j < x.size(); ++j) {
        const double gap = x[j] - x[i];
        if (gap >= lag_max) break;
        auto b = static_cast<std::size_t>(gap / width);
        if (b >= bins) b = bins - 1;
        counts[b] += 1.0;
      }
    }
    exposure += static_cast<double>(refs) * density;
  }

  TwoPointEstimate out;
  out.bin_width = width;
  out.lags.resize(bins);
  out.r2.resize(bins);
  out.reference.resize(bins);
  for (std::size_t b = 0; b < bins; ++b) {
    out.lags[b] = (static_cast<double>(b) + 0.5) * width;
    out.r2[b] = exposure > 0.0 ? counts[b] / (exposure * width) : 0.0;
    out.reference[b] = pair_correlation_reference(out.lags[b]);
  }
  return out;
}

TwoPointEstimate two_point_correlation(std::span<const double> ordinates, double lag_max, std::size_t bins) {
  const std::vector<std::vector<double>> one{std::vector<double>(ordinates.begin(), ordinates.end())};
  return two_point_correlation(std::span<const std::vector<double>>(one), lag_max, bins);
}

double mean_square_deviation(const TwoPointEstimate& estimate) {
  double s = 0.0;
  for (std::size_t b = 0; b < estimate.r2.size(); ++b) {
    const double d = estimate.r2[b] - estimate.reference[b];
    s += d * d;
  }
  return estimate.r2.empty() ? 0.0 : s / static_cast<double>(estimate.r2.size());
}

double poisson_mean_square_deviation(const TwoPointEstimate& estimate) {
  double s = 0.0;
  for (double ref : estimate.reference) s += (1.0 - ref) * (1.0 - ref);
  return estimate.reference.empty() ? 0.0 : s / static_cast<double>(estimate.reference.size());
}

}  // namespace gpue::stats
