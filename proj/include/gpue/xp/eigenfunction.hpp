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

#ifndef GPUE_XP_EIGENFUNCTION_HPP_
#define GPUE_XP_EIGENFUNCTION_HPP_

#include "gpue/numerics/dense_matrix.hpp"

namespace gpue::xp {

using numerics::Complex;

struct HalfLineGrid {
  double x_min = 0.5;
  double x_max = 2.0;
  int n_points = 15001;
  double step() const { return (x_max - x_min) / (n_points - 1); }
};

// psi(x) = |x|^{-1/2 - i t}; the branch is fixed on x > 0 and continued to
// x < 0 through |x|.
Complex hpt_eigenfunction(double t, double x);

// Applies H_PT = -x d/dx by second-order central differences to
// psi = x^{-1/2 - i t} and returns ‖H psi - (1/2 + i t) psi‖_2 / ‖psi‖_2 over
// the interior grid points. ValidationError unless 0 < x_min < x_max and
// n_points >= 3.
double hpt_eigenfunction_residual(double t, const HalfLineGrid& grid);

// conj(psi(-x)) / psi(x): the PT image of psi relative to psi at x.
Complex pt_image_ratio(double t, double x);

// true when the PT image ratio differs between x1 and x2, i.e. psi is not
// an eigenstate of PT. ValidationError for x = 0.
bool pt_breaking_check(double t, double x1, double x2, double tol = 1e-12);

}  // namespace gpue::xp

#endif  // GPUE_XP_EIGENFUNCTION_HPP_
