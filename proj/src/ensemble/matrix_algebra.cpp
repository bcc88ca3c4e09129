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

#include "gpue/ensemble/matrix_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

#include "gpue/error.hpp"

namespace gpue::ensemble {

namespace {

std::vector<Complex> diagonal_of(const DenseMatrix& eta) {
  if (!eta.is_square()) throw ValidationError("metric must be square");
  std::vector<Complex> diag(eta.rows());
  for (std::size_t r = 0; r < eta.rows(); ++r) {
    for (std::size_t c = 0; c < eta.cols(); ++c)
      if (r != c && eta(r, c) != Complex{}) throw ValidationError("metric must be diagonal");
    if (eta(r, r) == Complex{}) throw ValidationError("metric must be invertible");
    diag[r] = eta(r, r);
  }
  return diag;
}

// (a, b, c, d) as a function of (t, s, theta, phi).
std::array<double, 4> forward_map(const std::array<double, 4>& x) {
  const double half_s = 0.5 * x[1];
  return {0.5 * x[0], half_s * std::cos(2.0 * x[2]), half_s * std::sin(2.0 * x[2]) * std::cos(x[3]),
          half_s * std::sin(2.0 * x[2]) * std::sin(x[3])};
}

double det4(std::array<std::array<double, 4>, 4> m) {
  double det = 1.0;
  for (int col = 0; col < 4; ++col) {
    int pivot = col;
    for (int r = col + 1; r < 4; ++r)
      if (std::abs(m[r][col]) > std::abs(m[pivot][col])) pivot = r;
    if (m[pivot][col] == 0.0) return 0.0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (int r = col + 1; r < 4; ++r) {
      const double f = m[r][col] / m[col][col];
      for (int c = col; c < 4; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

}  // namespace

DenseMatrix realize(const MatrixABCD& m) {
  if (!(m.epsilon > 0.0)) throw ValidationError("realize: epsilon must be positive");
  const Complex off{m.c, m.d};
  return DenseMatrix{{m.a + m.b, off / m.epsilon}, {std::conj(off) * m.epsilon, m.a - m.b}};
}

DenseMatrix build_metric(double epsilon) {
  if (!(epsilon > 0.0)) throw ValidationError("build_metric: epsilon must be positive");
  return DenseMatrix{{epsilon, 0.0}, {0.0, 1.0 / epsilon}};
}

EigenPair2 eigenvalues2(const MatrixABCD& m) {
  const double r = std::sqrt(m.b * m.b + m.c * m.c + m.d * m.d);
  return {m.a + r, m.a - r};
}

DecompParams decompose(const MatrixABCD& m) {
  const double rho = std::hypot(m.c, m.d);
  const double r = std::hypot(m.b, rho);
  DecompParams dp;
  dp.t = 2.0 * m.a;
  dp.s = 2.0 * r;
  dp.theta = 0.5 * std::atan2(rho, m.b);
  double phi = std::atan2(m.d, m.c);
  if (phi < 0.0) phi += 2.0 * std::numbers::pi;
  if (phi >= 2.0 * std::numbers::pi) phi = 0.0;
  dp.phi = phi;
  return dp;
}

MatrixABCD reconstruct(const DecompParams& dp, double epsilon) {
  const double half_s = 0.5 * dp.s;
  const double sin2 = std::sin(2.0 * dp.theta);
  return {0.5 * dp.t, half_s * std::cos(2.0 * dp.theta), half_s * sin2 * std::cos(dp.phi),
          half_s * sin2 * std::sin(dp.phi), epsilon};
}

DenseMatrix build_D(double theta, double phi, double epsilon) {
  if (!(epsilon > 0.0)) throw ValidationError("build_D: epsilon must be positive");
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const Complex w = std::polar(1.0, phi);
  return DenseMatrix{{c, -s * w / epsilon}, {s * std::conj(w) * epsilon, c}};
}

double pseudo_hermiticity_residual(const DenseMatrix& h, const DenseMatrix& eta) {
  const auto diag = diagonal_of(eta);
  if (h.rows() != diag.size() || !h.is_square()) throw ValidationError("pseudo_hermiticity_residual: shape mismatch");
  double s = 0.0;
  for (std::size_t r = 0; r < h.rows(); ++r)
    for (std::size_t c = 0; c < h.cols(); ++c) s += std::norm(diag[r] * h(r, c) / diag[c] - std::conj(h(c, r)));
  return std::sqrt(s);
}

double pseudo_unitarity_residual(const DenseMatrix& d, const DenseMatrix& eta) {
  const auto diag = diagonal_of(eta);
  const DenseMatrix inv = numerics::inverse2(d);
  double s = 0.0;
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c) s += std::norm(std::conj(d(c, r)) - diag[r] * inv(r, c) / diag[c]);
  return std::sqrt(s);
}

double eigenvalue_product_modulus(const DenseMatrix& d) {
  const auto e = numerics::eigenvalues2(d);
  return std::abs(e.first * e.second);
}

double reconstruction_residual(const DecompParams& dp, double epsilon) {
  const DenseMatrix h = realize(reconstruct(dp, epsilon));
  const DenseMatrix d = build_D(dp.theta, dp.phi, epsilon);
  const double e_plus = 0.5 * (dp.t + dp.s);
  const double e_minus = 0.5 * (dp.t - dp.s);
  const DenseMatrix product = d * DenseMatrix{{e_plus, 0.0}, {0.0, e_minus}} * numerics::inverse2(d);
  return (h - product).frobenius_norm();
}

double pseudo_norm(const StateVector2& v, const DenseMatrix& eta) {
  const auto w = eta.apply(v);
  return numerics::inner(v, w).real();
}

EtaOrthogonality eta_orthogonality(const DenseMatrix& h, const DenseMatrix& eta) {
  const auto e = numerics::eigenvalues2(h);
  EtaOrthogonality out;
  out.lambda_plus = e.first;
  out.lambda_minus = e.second;
  out.degenerate = std::abs(e.first - e.second) < 1e-12;
  const auto plus = numerics::eigenvector2(h, e.first);
  const auto minus = numerics::eigenvector2(h, e.second);
  out.overlap = std::abs(numerics::inner(plus, eta.apply(minus)));
  out.norm_product = numerics::norm2(plus) * numerics::norm2(minus);
  return out;
}

double jacobian_numeric(const DecompParams& dp) {
  if (!(dp.s > 0.0)) throw ValidationError("jacobian_numeric: s must be positive");
  constexpr double kEdge = 1e-9;
  if (!(dp.theta > kEdge && dp.theta < 0.5 * std::numbers::pi - kEdge))
    throw ValidationError("jacobian_numeric: theta too close to 0 or pi/2 for a finite-difference step");

  const std::array<double, 4> x0{dp.t, dp.s, dp.theta, dp.phi};
  const double edge_room = std::min(dp.theta, 0.5 * std::numbers::pi - dp.theta);
  const std::array<double, 4> step{1e-5 * std::max(1.0, std::abs(dp.t)), 1e-5 * std::max(1e-3, dp.s),
                                   std::min(1e-5, 0.5 * edge_room), 1e-5};
  std::array<std::array<double, 4>, 4> jac{};
  for (int j = 0; j < 4; ++j) {
    auto hi = x0;
    auto lo = x0;
    hi[j] += step[j];
    lo[j] -= step[j];
    const auto fh = forward_map(hi);
    const auto fl = forward_map(lo);
    for (int i = 0; i < 4; ++i) jac[i][j] = (fh[i] - fl[i]) / (2.0 * step[j]);
  }
  return std::abs(det4(jac));
}

}  // namespace gpue::ensemble
