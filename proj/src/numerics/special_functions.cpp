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

#include "gpue/numerics/special_functions.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "gpue/error.hpp"

namespace gpue::numerics {

namespace {

constexpr double kTwoOverSqrtPi = 2.0 * std::numbers::inv_sqrtpi;
constexpr double kSeriesLimit = 6.0;

// (2/sqrt(pi)) sum x^{2n+1} / (n! (2n+1)); every term is positive.
double erfi_series(double x) {
  const double x2 = x * x;
  double power = x;  // x^{2n+1}/n!
  double sum = x;
  for (int n = 1; n < 2000; ++n) {
    power *= x2 / n;
    const double term = power / (2 * n + 1);
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum)) break;
  }
  return kTwoOverSqrtPi * sum;
}

// F(x) ~ sum_k (2k-1)!! / (2^{k+1} x^{2k+1}), truncated at its smallest term.
double dawson_asymptotic(double x) {
  const double inv2x2 = 1.0 / (2.0 * x * x);
  double term = 0.5 / x;
  double sum = term;
  for (int k = 1; k < 200; ++k) {
    const double next = term * (2 * k - 1) * inv2x2;
    if (next >= term) break;
    term = next;
    sum += term;
    if (term < 1e-17 * sum) break;
  }
  return sum;
}

}  // namespace

double erfi(double x) {
  if (!std::isfinite(x)) throw ValidationError("erfi: argument must be finite");
  const double ax = std::abs(x);
  if (ax > kErfiCutoff)
    throw NumericalError("erfi: overflow, |x| = " + std::to_string(ax) + " exceeds cutoff " +
                         std::to_string(kErfiCutoff));
  if (ax <= kSeriesLimit) return erfi_series(x);
  const double v = kTwoOverSqrtPi * std::exp(ax * ax) * dawson_asymptotic(ax);
  return x < 0 ? -v : v;
}

double dawson(double x) {
  if (!std::isfinite(x)) throw ValidationError("dawson: argument must be finite");
  const double ax = std::abs(x);
  if (ax <= kSeriesLimit) return 0.5 * std::sqrt(std::numbers::pi) * std::exp(-x * x) * erfi_series(x);
  const double v = dawson_asymptotic(ax);
  return x < 0 ? -v : v;
}

double erfi_over_q(double q, double u) {
  const double z = q * u;
  if (std::abs(z) < kSmallArgument) {
    const double z2 = z * z;
    return kTwoOverSqrtPi * u * (1.0 + z2 / 3.0 + z2 * z2 / 10.0);
  }
  return erfi(z) / q;
}

double dawson_over_q(double q, double u) {
  const double z = q * u;
  if (std::abs(z) < kSmallArgument) {
    const double z2 = z * z;
    return u * (1.0 - 2.0 * z2 / 3.0 + 4.0 * z2 * z2 / 15.0);
  }
  return dawson(z) / q;
}

namespace {

// Runs the recurrence to n_max; visit(n, value) receives each h_n.
template <class Visit>
void hermite_recurrence(int n_max, double x, Visit&& visit) {
  constexpr double kBig = 1e150;
  const double kLogBig = std::log(kBig);
  double log_scale = -0.5 * x * x;
  double prev = 0.0;
  double cur = std::pow(std::numbers::pi, -0.25);
  for (int n = 0;; ++n) {
    visit(n, cur * std::exp(log_scale));
    if (n == n_max) break;
    const double next = x * std::sqrt(2.0 / (n + 1)) * cur - std::sqrt(double(n) / (n + 1)) * prev;
    prev = cur;
    cur = next;
    if (std::abs(cur) > kBig) {
      cur /= kBig;
      prev /= kBig;
      log_scale += kLogBig;
    }
  }
}

}  // namespace

double hermite_function(int n, double x) {
  if (n < 0) throw ValidationError("hermite_function: n must be non-negative");
  double out = 0.0;
  hermite_recurrence(n, x, [&](int k, double v) {
    if (k == n) out = v;
  });
  return out;
}

std::vector<double> hermite_functions(int n_max, double x) {
  if (n_max < 0) throw ValidationError("hermite_functions: n_max must be non-negative");
  std::vector<double> out(n_max + 1);
  hermite_recurrence(n_max, x, [&](int k, double v) { out[k] = v; });
  return out;
}

std::vector<double> hermite_function_derivatives(int n_max, double x) {
  const std::vector<double> h = hermite_functions(n_max + 1, x);
  std::vector<double> out(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    const double lower = n > 0 ? std::sqrt(n / 2.0) * h[n - 1] : 0.0;
    out[n] = lower - std::sqrt((n + 1) / 2.0) * h[n + 1];
  }
  return out;
}

}  // namespace gpue::numerics
