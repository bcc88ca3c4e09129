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

#include "gpue/xp/eigenfunction.hpp"

#include <cmath>

#include "gpue/error.hpp"

namespace gpue::xp {

Complex hpt_eigenfunction(double t, double x) {
  if (x == 0.0) throw ValidationError("hpt_eigenfunction: x must be nonzero");
  return std::exp(Complex(-0.5, -t) * std::log(std::abs(x)));
}

double hpt_eigenfunction_residual(double t, const HalfLineGrid& grid) {
  if (!(grid.x_min > 0.0)) throw ValidationError("hpt_eigenfunction_residual: grid must stay strictly inside (0, inf)");
  if (!(grid.x_max > grid.x_min)) throw ValidationError("hpt_eigenfunction_residual: need x_max > x_min");
  if (grid.n_points < 3) throw ValidationError("hpt_eigenfunction_residual: need at least three grid points");
  const double h = grid.step();
  const Complex lambda{0.5, t};
  double res2 = 0.0;
  double psi2 = 0.0;
  for (int i = 1; i + 1 < grid.n_points; ++i) {
    const double x = grid.x_min + h * i;
    const Complex psi = hpt_eigenfunction(t, x);
    const Complex dpsi = (hpt_eigenfunction(t, x + h) - hpt_eigenfunction(t, x - h)) / (2.0 * h);
    const Complex r = -x * dpsi - lambda * psi;
    res2 += std::norm(r);
    psi2 += std::norm(psi);
  }
  return std::sqrt(res2 / psi2);
}

Complex pt_image_ratio(double t, double x) {
  return std::conj(hpt_eigenfunction(t, -x)) / hpt_eigenfunction(t, x);
}

bool pt_breaking_check(double t, double x1, double x2, double tol) {
  return std::abs(pt_image_ratio(t, x1) - pt_image_ratio(t, x2)) > tol;
}

}  // namespace gpue::xp
