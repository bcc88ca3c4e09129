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

#ifndef GPUE_ENSEMBLE_GAMMA_SHAPE_HPP_
#define GPUE_ENSEMBLE_GAMMA_SHAPE_HPP_

namespace gpue::ensemble {

// Every constant the deformation gamma induces on the ensemble.
//
//   epsilon = e^{-gamma}          metric scale
//   cosh2g  = cosh 2 gamma        = (epsilon^2 + epsilon^-2) / 2
//   p       = sqrt(cosh2g) / 2
//   q       = sqrt(cosh2g - 1) / 2 = |sinh gamma| / sqrt 2
//   alpha   = (2/sqrt pi) (1 + artanh(q/p) / (4 p q))
//
// alpha is the mean spacing in units of sigma; p^2 - q^2 = 1/4.
struct GammaShape {
  double gamma = 0.0;
  double epsilon = 1.0;
  double cosh2g = 1.0;
  double p = 0.5;
  double q = 0.0;
  double alpha = 0.0;
};

// Throws ValidationError for non-finite gamma. At q -> 0 the artanh term
// takes its limit 1/(4 p^2).
GammaShape shape_from_gamma(double gamma);

}  // namespace gpue::ensemble

#endif  // GPUE_ENSEMBLE_GAMMA_SHAPE_HPP_
