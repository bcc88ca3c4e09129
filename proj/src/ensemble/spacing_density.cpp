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

#include "gpue/ensemble/spacing_density.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "gpue/error.hpp"
#include "gpue/numerics/quadrature.hpp"
#include "gpue/numerics/special_functions.hpp"

namespace gpue::ensemble {

namespace {

constexpr double kPi = std::numbers::pi;
// erfi(alpha q x) is evaluated directly up to this argument.
constexpr double kDirectLimit = 6.0;

void require_non_negative(double x, const char* who) {
  if (!(x >= 0.0)) throw ValidationError(std::string(who) + ": argument must be non-negative");
}

}  // namespace

double analytic_spacing_pdf(const GammaShape& shape, double x) {
  require_non_negative(x, "analytic_spacing_pdf");
  if (std::isinf(x)) return 0.0;
  const double a = shape.alpha;
  const double prefactor = 0.25 * a * a * shape.cosh2g * x;
  const double z = a * shape.q * x;
  if (z <= kDirectLimit) {
    return prefactor * std::exp(-shape.p * shape.p * a * a * x * x) * numerics::erfi_over_q(shape.q, a * x);
  }
  return prefactor * std::exp(-0.25 * a * a * x * x) * 2.0 * std::numbers::inv_sqrtpi *
         numerics::dawson_over_q(shape.q, a * x);
}

double analytic_spacing_cdf(const GammaShape& shape, double x) {
  require_non_negative(x, "analytic_spacing_cdf");
  if (std::isinf(x)) return 1.0;
  const double a = shape.alpha;
  const double z = a * shape.q * x;
  double tail;
  if (z <= kDirectLimit) {
    tail = 0.5 * std::exp(-shape.p * shape.p * a * a * x * x) * numerics::erfi_over_q(shape.q, a * x);
  } else {
    tail = std::exp(-0.25 * a * a * x * x) * std::numbers::inv_sqrtpi * numerics::dawson_over_q(shape.q, a * x);
  }
  return std::erf(0.5 * a * x) - tail;
}

double gue_surmise_pdf(double x) {
  require_non_negative(x, "gue_surmise_pdf");
  if (std::isinf(x)) return 0.0;
  return 32.0 / (kPi * kPi) * x * x * std::exp(-4.0 * x * x / kPi);
}

double gue_surmise_cdf(double x) {
  require_non_negative(x, "gue_surmise_cdf");
  if (std::isinf(x)) return 1.0;
  return std::erf(2.0 * x / std::sqrt(kPi)) - 4.0 / kPi * x * std::exp(-4.0 * x * x / kPi);
}

double goe_surmise_pdf(double x) {
  require_non_negative(x, "goe_surmise_pdf");
  if (std::isinf(x)) return 0.0;
  return 0.5 * kPi * x * std::exp(-0.25 * kPi * x * x);
}

double goe_surmise_cdf(double x) {
  require_non_negative(x, "goe_surmise_cdf");
  if (std::isinf(x)) return 1.0;
  return -std::expm1(-0.25 * kPi * x * x);
}

double unnormalized_spacing_density(const GammaShape& shape, double s, double sigma, ErfiArgument argument) {
  require_non_negative(s, "unnormalized_spacing_density");
  if (!(sigma > 0.0)) throw ValidationError("unnormalized_spacing_density: sigma must be positive");
  const double u = argument == ErfiArgument::kQsOverSigma ? s / sigma : s / (2.0 * sigma);
  return s * std::exp(-shape.p * shape.p * s * s / (sigma * sigma)) * numerics::erfi_over_q(shape.q, u);
}

double marginal_oracle(const GammaShape& shape, double s, double sigma, double tol) {
  require_non_negative(s, "marginal_oracle");
  if (!(sigma > 0.0)) throw ValidationError("marginal_oracle: sigma must be positive");
  // The integrand is bounded by e^{-s^2/(4 sigma^2)}, which underflows here.
  if (s == 0.0 || s > 64.0 * sigma) return 0.0;
  const double inv4s2 = 1.0 / (4.0 * sigma * sigma);
  const double s2 = s * s;
  const double jac_s = 0.25 * s2;

  auto over_t = [&](double theta, double phi) {
    (void)phi;
    const double c = std::cos(theta);
    const double sn = std::sin(theta);
    const double c2t = std::cos(2.0 * theta);
    const double angular = -s2 * inv4s2 * c2t * c2t - s2 / (sigma * sigma) * shape.cosh2g * c * c * sn * sn;
    const double jac = jac_s * std::sin(2.0 * theta);
    return numerics::quad_adaptive(
        [&](double t) { return std::exp(-t * t * inv4s2 + angular) * jac; },
        -std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity(), tol);
  };
  auto over_phi = [&](double theta) {
    return numerics::quad_adaptive([&](double phi) { return over_t(theta, phi); }, 0.0, 2.0 * kPi, tol);
  };
  return numerics::quad_adaptive(over_phi, 0.0, 0.5 * kPi, tol);
}

OracleCurve normalized_marginal_oracle(const GammaShape& shape, std::span<const double> xs, double sigma) {
  const double inf = std::numeric_limits<double>::infinity();
  OracleCurve out;
  out.norm = numerics::quad_adaptive([&](double s) { return marginal_oracle(shape, s, sigma); }, 0.0, inf, 1e-10);
  const double moment =
      numerics::quad_adaptive([&](double s) { return s * marginal_oracle(shape, s, sigma); }, 0.0, inf, 1e-10);
  out.mean_spacing = moment / out.norm;
  out.x.assign(xs.begin(), xs.end());
  out.pdf.reserve(xs.size());
  for (double x : xs) out.pdf.push_back(out.mean_spacing * marginal_oracle(shape, out.mean_spacing * x, sigma) / out.norm);
  return out;
}

}  // namespace gpue::ensemble
