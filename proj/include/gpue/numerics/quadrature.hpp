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

#ifndef GPUE_NUMERICS_QUADRATURE_HPP_
#define GPUE_NUMERICS_QUADRATURE_HPP_

#include <functional>
#include <vector>

namespace gpue::numerics {

using RealFunction = std::function<double(double)>;

struct QuadResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int evaluations = 0;
  int subdivisions = 0;
};

struct QuadOptions {
  double tol = 1e-12;
  int max_subdivisions = 5000;
};

// Globally adaptive Gauss-Kronrod (7/15) integration of f over [lo, hi].
//
// Either bound may be infinite. A half-infinite range [lo, inf) is mapped by
// x = lo + t/(1-t), t in [0, 1); (-inf, inf) is split at zero. In mapped
// ranges a non-finite integrand value is treated as a vanished tail (valid
// for the Gaussian-tailed integrands used here). Bisection of the interval
// with the largest error continues until the estimate satisfies
// err <= tol * (1 + |result|). Throws NumericalError past max_subdivisions
// and ValidationError for tol <= 0 or NaN bounds.
QuadResult quad_adaptive_detailed(const RealFunction& f, double lo, double hi,
                                  const QuadOptions& options = {});

inline double quad_adaptive(const RealFunction& f, double lo, double hi, double tol = 1e-12) {
  return quad_adaptive_detailed(f, lo, hi, QuadOptions{tol}).value;
}

struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// n-point Gauss-Legendre rule mapped to [lo, hi].
GaussRule gauss_legendre(int n, double lo = -1.0, double hi = 1.0);

}  // namespace gpue::numerics

#endif  // GPUE_NUMERICS_QUADRATURE_HPP_
