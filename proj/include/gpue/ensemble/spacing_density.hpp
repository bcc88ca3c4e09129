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

#ifndef GPUE_ENSEMBLE_SPACING_DENSITY_HPP_
#define GPUE_ENSEMBLE_SPACING_DENSITY_HPP_

#include <span>
#include <vector>

#include "gpue/ensemble/gamma_shape.hpp"

namespace gpue::ensemble {

// Normalized spacing density in the unit-mean variable x = s/<s>:
//
//   P(x) = (alpha^2 cosh2g / 4) x e^{-p^2 alpha^2 x^2} erfi(alpha q x) / q
//
// The bracket goes through erfi_over_q so gamma = 0 reproduces the GUE
// surmise exactly; large arguments switch to the Dawson form
// e^{-alpha^2 x^2 / 4} (2/sqrt pi) F(alpha q x) / q, which is the same
// expression with p^2 - q^2 = 1/4 cancelled analytically.
double analytic_spacing_pdf(const GammaShape& shape, double x);

// Closed-form CDF of analytic_spacing_pdf, from integrating by parts:
//   F(X) = erf(alpha X / 2) - (1/2) e^{-p^2 alpha^2 X^2} erfi(alpha q X) / q.
double analytic_spacing_cdf(const GammaShape& shape, double x);

// (32/pi^2) x^2 e^{-4 x^2 / pi}
double gue_surmise_pdf(double x);
double gue_surmise_cdf(double x);
// (pi/2) x e^{-pi x^2 / 4}
double goe_surmise_pdf(double x);
double goe_surmise_cdf(double x);

// Which erfi argument the unnormalized spacing law in physical units uses.
enum class ErfiArgument {
  kQsOverSigma,     // what integrating the (s, t, theta, phi) density gives
  kQsOverTwoSigma,  // the alternative transcription q s / (2 sigma)
};

// s e^{-p^2 s^2 / sigma^2} erfi(arg) / q, unnormalized.
double unnormalized_spacing_density(const GammaShape& shape, double s, double sigma,
                                    ErfiArgument argument = ErfiArgument::kQsOverSigma);

// ∫ dt ∫_0^{pi/2} dtheta ∫_0^{2pi} dphi of
//   exp[-t^2/(4 sigma^2) - (s^2/(4 sigma^2)) cos^2 2theta
//       - (s^2/sigma^2) cosh2g cos^2 theta sin^2 theta] * s^2 sin 2theta / 4
// by nested adaptive quadrature. Unnormalized density of s.
double marginal_oracle(const GammaShape& shape, double s, double sigma = 1.0, double tol = 1e-11);

struct OracleCurve {
  double norm = 0.0;          // ∫ marginal_oracle ds
  double mean_spacing = 0.0;  // ∫ s marginal_oracle ds / norm
  std::vector<double> x;
  std::vector<double> pdf;  // mean * marginal(mean x) / norm
};

// Normalizes marginal_oracle numerically (no closed-form constants) and
// evaluates it on the unit-mean grid xs.
OracleCurve normalized_marginal_oracle(const GammaShape& shape, std::span<const double> xs, double sigma = 1.0);

}  // namespace gpue::ensemble

#endif  // GPUE_ENSEMBLE_SPACING_DENSITY_HPP_
