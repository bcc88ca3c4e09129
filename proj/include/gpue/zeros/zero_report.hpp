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

#ifndef GPUE_ZEROS_ZERO_REPORT_HPP_
#define GPUE_ZEROS_ZERO_REPORT_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "gpue/ensemble/gamma_shape.hpp"
#include "gpue/stats/histogram.hpp"
#include "gpue/stats/ks.hpp"
#include "gpue/stats/two_point.hpp"
#include "gpue/zeros/zero_table.hpp"

namespace gpue::zeros {

struct ZeroReportOptions {
  std::size_t bins = stats::kDefaultBins;
  double histogram_max = stats::kDefaultHistogramMax;
  double lag_max = 3.0;
  std::size_t two_point_bins = 30;
  double ks_coefficient = stats::kKsCoefficient001;
};

struct ShapeKs {
  ensemble::GammaShape shape;
  stats::KsReport ks;
};

struct ZeroSpacingReport {
  std::string source_label;
  std::size_t n_zeros = 0;
  double unfolded_mean_gap = 0.0;
  std::vector<double> spacings;  // unit-mean nearest-neighbour spacings
  stats::KsReport ks_gue;
  stats::KsReport ks_goe;
  std::vector<ShapeKs> ks_shapes;
  stats::Histogram histogram;
  stats::TwoPointEstimate two_point;
  double two_point_msd = 0.0;          // vs 1 - sinc^2
  double poisson_msd = 0.0;            // flat r2 = 1 vs 1 - sinc^2
};

// Unfolds, forms nearest-neighbour spacings, and compares them with the GUE
// and GOE surmises and with the deformed law for every shape. Requires at
// least 1000 ordinates.
ZeroSpacingReport zero_spacing_report(const ZeroTable& table, const std::vector<ensemble::GammaShape>& shapes,
                                      const ZeroReportOptions& options = {});

}  // namespace gpue::zeros

#endif  // GPUE_ZEROS_ZERO_REPORT_HPP_
