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

#include "gpue/ensemble/gamma_shape.hpp"

#include <cmath>
#include <numbers>

#include "gpue/error.hpp"

namespace gpue::ensemble {

GammaShape shape_from_gamma(double gamma) {
  if (!std::isfinite(gamma)) throw ValidationError("shape_from_gamma: gamma must be finite");
  GammaShape s;
  s.gamma = gamma;
  s.epsilon = std::exp(-gamma);
  const double sh = std::sinh(gamma);
  s.q = std::abs(sh) / std::numbers::sqrt2;
  s.p = std::sqrt(0.25 + s.q * s.q);
  s.cosh2g = 1.0 + 2.0 * sh * sh;

  const double r = s.q / s.p;
  double artanh_term;
  if (r < 1e-4) {
    const double r2 = r * r;
    artanh_term = (1.0 + r2 / 3.0 + r2 * r2 / 5.0) / (4.0 * s.p * s.p);
  } else {
    artanh_term = std::atanh(r) / (4.0 * s.p * s.q);
  }
  s.alpha = 2.0 * std::numbers::inv_sqrtpi * (1.0 + artanh_term);
  return s;
}

}  // namespace gpue::ensemble
