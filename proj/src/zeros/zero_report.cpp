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

#include "gpue/zeros/zero_report.hpp"

#include "gpue/ensemble/spacing_density.hpp"
#include "gpue/error.hpp"
#include "gpue/stats/spacing_sample.hpp"

namespace gpue::zeros {

ZeroSpacingReport zero_spacing_report(const ZeroTable& table, const std::vector<ensemble::GammaShape>& shapes,
                                      const ZeroReportOptions& options) {
  if (table.ordinates.size() < 1000)
    throw ValidationError("zero_spacing_report: need at least 1000 ordinates, got " +
                          std::to_string(table.ordinates.size()));
  const UnfoldedSequence unfolded = unfold(table);
  const auto gaps = stats::nearest_neighbor_gaps(unfolded.values);

  ZeroSpacingReport report;
  report.source_label = table.source_label;
  report.n_zeros = table.ordinates.size();
  report.unfolded_mean_gap = (unfolded.values.back() - unfolded.values.front()) / static_cast<double>(gaps.size());

  const auto sample = stats::normalize_spacings(gaps);
  report.spacings = sample.values;
  report.ks_gue = stats::ks_distance(sample, ensemble::gue_surmise_cdf, options.ks_coefficient);
  report.ks_goe = stats::ks_distance(sample, ensemble::goe_surmise_cdf, options.ks_coefficient);
  for (const auto& shape : shapes) {
    report.ks_shapes.push_back(
        {shape, stats::ks_distance(sample, [&](double x) { return ensemble::analytic_spacing_cdf(shape, x); },
                                   options.ks_coefficient)});
  }
  report.histogram = stats::make_histogram(sample.values, 0.0, options.histogram_max, options.bins);
  report.two_point = stats::two_point_correlation(unfolded.values, options.lag_max, options.two_point_bins);
  report.two_point_msd = stats::mean_square_deviation(report.two_point);
  report.poisson_msd = stats::poisson_mean_square_deviation(report.two_point);
  return report;
}

}  // namespace gpue::zeros
