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

#include "gpue/numerics/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <string>

#include "gpue/error.hpp"

namespace gpue::numerics {

namespace {

// Kronrod abscissae (positive half) and weights; Gauss weights on the odd nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a;
  double b;
  double value;
  double error;
  bool operator<(const Segment& other) const { return error < other.error; }
};

template <class G>
Segment kronrod15(const G& g, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = g(center);
  double resg = fc * kWg[3];
  double resk = fc * kWgk[7];
  double resabs = std::abs(resk);
  std::array<double, 7> f1{}, f2{};
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    f1[j] = g(center - dx);
    f2[j] = g(center + dx);
    const double sum = f1[j] + f2[j];
    resk += kWgk[j] * sum;
    resabs += kWgk[j] * (std::abs(f1[j]) + std::abs(f2[j]));
    if (j % 2 == 1) resg += kWg[j / 2] * sum;
  }
  const double mean = 0.5 * resk;
  double resasc = kWgk[7] * std::abs(fc - mean);
  for (int j = 0; j < 7; ++j) resasc += kWgk[j] * (std::abs(f1[j] - mean) + std::abs(f2[j] - mean));

  const double absh = std::abs(half);
  resabs *= absh;
  resasc *= absh;
  double err = std::abs((resk - resg) * half);
  if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  constexpr double eps = std::numeric_limits<double>::epsilon();
  if (resabs > std::numeric_limits<double>::min() / (50.0 * eps)) err = std::max(50.0 * eps * resabs, err);
  return Segment{a, b, resk * half, err};
}

template <class G>
QuadResult integrate_finite(const G& g, double a, double b, const QuadOptions& options) {
  QuadResult out;
  std::priority_queue<Segment> heap;
  heap.push(kronrod15(g, a, b));
  out.evaluations = 15;
  double total = heap.top().value;
  double error = heap.top().error;
  while (error > options.tol * (1.0 + std::abs(total))) {
    if (out.subdivisions >= options.max_subdivisions)
      throw NumericalError("quad_adaptive: no convergence after " + std::to_string(out.subdivisions) +
                           " subdivisions (error estimate " + std::to_string(error) + ")");
    Segment worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    Segment left = kronrod15(g, worst.a, mid);
    Segment right = kronrod15(g, mid, worst.b);
    out.evaluations += 30;
    ++out.subdivisions;
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
  }
  // Re-sum to shed the drift of the running updates.
  total = 0.0;
  error = 0.0;
  while (!heap.empty()) {
    total += heap.top().value;
    error += heap.top().error;
    heap.pop();
  }
  out.value = total;
  out.error_estimate = error;
  return out;
}

}  // namespace

QuadResult quad_adaptive_detailed(const RealFunction& f, double lo, double hi, const QuadOptions& options) {
  if (!(options.tol > 0.0)) throw ValidationError("quad_adaptive: tol must be positive");
  if (std::isnan(lo) || std::isnan(hi)) throw ValidationError("quad_adaptive: NaN bound");
  if (lo == hi) return {};
  if (lo > hi) {
    QuadResult r = quad_adaptive_detailed(f, hi, lo, options);
    r.value = -r.value;
    return r;
  }
  const bool lo_inf = std::isinf(lo);
  const bool hi_inf = std::isinf(hi);
  if (lo_inf && hi_inf) {
    QuadResult left = quad_adaptive_detailed([&](double x) { return f(-x); }, 0.0, hi, options);
    QuadResult right = quad_adaptive_detailed(f, 0.0, hi, options);
    return {left.value + right.value, left.error_estimate + right.error_estimate,
            left.evaluations + right.evaluations, left.subdivisions + right.subdivisions};
  }
  if (lo_inf) return quad_adaptive_detailed([&](double x) { return f(-x); }, -hi, -lo, options);
  if (hi_inf) {
    auto mapped = [&](double t) {
      const double one_minus = 1.0 - t;
      const double v = f(lo + t / one_minus) / (one_minus * one_minus);
      return std::isfinite(v) ? v : 0.0;
    };
    return integrate_finite(mapped, 0.0, 1.0, options);
  }
  auto checked = [&](double x) {
    const double v = f(x);
    if (!std::isfinite(v)) throw NumericalError("quad_adaptive: non-finite integrand at x = " + std::to_string(x));
    return v;
  };
  return integrate_finite(checked, lo, hi, options);
}

GaussRule gauss_legendre(int n, double lo, double hi) {
  if (n < 1) throw ValidationError("gauss_legendre: need at least one node");
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = 0.0;
      for (int k = 1; k <= n; ++k) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p2) / k;
      }
      dp = n * (z * p0 - p1) / (z * z - 1.0);
      const double step = p0 / dp;
      z -= step;
      if (std::abs(step) < 1e-16) break;
    }
    // Recompute the derivative at the converged node for the weight.
    double p0 = 1.0, p1 = 0.0;
    for (int k = 1; k <= n; ++k) {
      const double p2 = p1;
      p1 = p0;
      p0 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p2) / k;
    }
    dp = n * (z * p0 - p1) / (z * z - 1.0);
    const double w = 2.0 / ((1.0 - z * z) * dp * dp);
    rule.nodes[i] = mid - half * z;
    rule.nodes[n - 1 - i] = mid + half * z;
    rule.weights[i] = half * w;
    rule.weights[n - 1 - i] = half * w;
  }
  return rule;
}

}  // namespace gpue::numerics
