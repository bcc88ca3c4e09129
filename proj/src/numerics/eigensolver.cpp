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

#include "gpue/numerics/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "gpue/error.hpp"

namespace gpue::numerics {

namespace {

double off_diagonal_mass(const DenseMatrix& a) {
  double s = 0.0;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = r + 1; c < a.cols(); ++c) s += std::norm(a(r, c));
  return s;
}

}  // namespace

HermitianSpectrum hermitian_eigensolve(const DenseMatrix& input, const EigensolveOptions& options) {
  if (!input.is_square() || input.rows() == 0)
    throw ValidationError("hermitian_eigensolve: matrix must be square and nonempty");
  const double defect = hermiticity_defect(input);
  if (defect > options.hermitian_tol)
    throw ValidationError("hermitian_eigensolve: matrix is not Hermitian (relative defect " +
                          std::to_string(defect) + ")");

  const std::size_t n = input.rows();
  DenseMatrix a = hermitian_part(input);
  for (std::size_t i = 0; i < n; ++i) a(i, i) = a(i, i).real();

  DenseMatrix v;
  if (options.compute_vectors) v = DenseMatrix::identity(n);

  const double scale = a.frobenius_norm();
  const double eps = std::numeric_limits<double>::epsilon();
  const double target = (eps * scale) * (eps * scale);

  int sweep = 0;
  for (; sweep < options.max_sweeps; ++sweep) {
    const double off = off_diagonal_mass(a);
    if (off <= target || scale == 0.0) break;

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double g = std::abs(apq);
        if (g == 0.0) continue;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        // Negligible against both diagonal entries: drop it.
        if (sweep > 3 && std::abs(app) + 100.0 * g == std::abs(app) &&
            std::abs(aqq) + 100.0 * g == std::abs(aqq)) {
          a(p, q) = 0.0;
          a(q, p) = 0.0;
          continue;
        }

        const double tau = (aqq - app) / (2.0 * g);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const Complex e = apq / g;
        const Complex se = s * e;
        const Complex se_bar = std::conj(se);

        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          const Complex new_kp = c * akp - se_bar * akq;
          const Complex new_kq = se * akp + c * akq;
          a(k, p) = new_kp;
          a(k, q) = new_kq;
          a(p, k) = std::conj(new_kp);
          a(q, k) = std::conj(new_kq);
        }
        a(p, p) = app - t * g;
        a(q, q) = aqq + t * g;
        a(p, q) = 0.0;
        a(q, p) = 0.0;

        if (options.compute_vectors) {
          for (std::size_t k = 0; k < n; ++k) {
            const Complex vkp = v(k, p);
            const Complex vkq = v(k, q);
            v(k, p) = c * vkp - se_bar * vkq;
            v(k, q) = se * vkp + c * vkq;
          }
        }
      }
    }
  }
  if (sweep == options.max_sweeps && off_diagonal_mass(a) > target)
    throw NumericalError("hermitian_eigensolve: no convergence after " +
                         std::to_string(options.max_sweeps) + " sweeps");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

  HermitianSpectrum out;
  out.eigenvalues.reserve(n);
  for (std::size_t i : order) out.eigenvalues.push_back(a(i, i).real());
  if (options.compute_vectors) {
    out.eigenvectors = DenseMatrix(n, n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) out.eigenvectors(k, j) = v(k, order[j]);
  }
  return out;
}

std::vector<double> hermitian_eigenvalues(const DenseMatrix& a, double hermitian_tol) {
  EigensolveOptions options;
  options.compute_vectors = false;
  options.hermitian_tol = hermitian_tol;
  return hermitian_eigensolve(a, options).eigenvalues;
}

}  // namespace gpue::numerics
