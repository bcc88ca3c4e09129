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

#ifndef GPUE_NUMERICS_SPECIAL_FUNCTIONS_HPP_
#define GPUE_NUMERICS_SPECIAL_FUNCTIONS_HPP_

#include <vector>

namespace gpue::numerics {

// |x| above which erfi(x) ~ e^{x^2}/(x sqrt(pi)) no longer fits in a double.
inline constexpr double kErfiCutoff = 26.0;

// erfi(q u)/q switches to its power series once |q u| drops below this.
inline constexpr double kSmallArgument = 1e-3;

// Imaginary error function, erfi(x) = (x/sqrt(pi)) ∫_{-1}^{1} e^{x^2 y^2} dy
// = (2/sqrt(pi)) ∫_0^x e^{u^2} du. Positive-term Maclaurin series for
// |x| <= 6 and e^{x^2} times Dawson's asymptotic expansion beyond. Relative
// error below 1e-13 everywhere. Throws NumericalError for |x| > kErfiCutoff
// and ValidationError for non-finite x.
double erfi(double x);

// Dawson's integral F(x) = e^{-x^2} ∫_0^x e^{u^2} du = (sqrt(pi)/2) e^{-x^2} erfi(x).
// Defined for every finite x.
double dawson(double x);

// erfi(q * u) / q without the 0/0 at q = 0: for |q u| < kSmallArgument the
// three-term series (2/sqrt(pi)) u (1 + z^2/3 + z^4/10), z = q u, is used.
double erfi_over_q(double q, double u);

// dawson(q * u) / q with the same small-argument treatment.
double dawson_over_q(double q, double u);

// Normalized harmonic-oscillator eigenfunction h_n(x) = (2^n n! sqrt(pi))^{-1/2}
// H_n(x) e^{-x^2/2}, by the upward recurrence
// h_{n+1} = x sqrt(2/(n+1)) h_n - sqrt(n/(n+1)) h_{n-1},
// carried with a separate log-scale so no intermediate overflows or
// underflows.
double hermite_function(int n, double x);

// h_0(x), ..., h_{n_max}(x).
std::vector<double> hermite_functions(int n_max, double x);

// h_n'(x) = sqrt(n/2) h_{n-1}(x) - sqrt((n+1)/2) h_{n+1}(x), n = 0..n_max.
std::vector<double> hermite_function_derivatives(int n_max, double x);

}  // namespace gpue::numerics

#endif  // GPUE_NUMERICS_SPECIAL_FUNCTIONS_HPP_
