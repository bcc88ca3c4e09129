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

#include "gpue/xp/hamiltonians.hpp"

#include <cmath>
#include <string>

#include "gpue/error.hpp"
#include "gpue/numerics/eigensolver.hpp"
#include "gpue/numerics/quadrature.hpp"
#include "gpue/numerics/special_functions.hpp"

namespace gpue::xp {

namespace {

constexpr Complex kI{0.0, 1.0};

OperatorMatrix wrap(DenseMatrix m, std::vector<BasisSpec> basis) {
  OperatorMatrix op;
  op.hermiticity_defect = numerics::hermiticity_defect(m);
  op.matrix = std::move(m);
  op.basis = std::move(basis);
  return op;
}

void require_size(int n, int min, const char* who) {
  if (n < min) throw ValidationError(std::string(who) + ": basis size must be at least " + std::to_string(min));
}

}  // namespace

OperatorMatrix build_hbk(int n, ProductForm form) {
  require_size(n, 4, "build_hbk");
  DenseMatrix xp = form == ProductForm::kNormalOrdered ? xp_normal_ordered(n) : xp_truncated_product(n);
  for (int k = 0; k < n; ++k) xp(k, k) -= Complex(0.0, 0.5);
  return wrap(std::move(xp), {BasisSpec{n, BasisKind::kFullOscillator}});
}

OperatorMatrix build_hpt(int n, ProductForm form) {
  require_size(n, 4, "build_hpt");
  DenseMatrix xp = form == ProductForm::kNormalOrdered ? xp_normal_ordered(n) : xp_truncated_product(n);
  return wrap(xp * (-kI), {BasisSpec{n, BasisKind::kFullOscillator}});
}

std::vector<Complex> hpt_spectrum(const OperatorMatrix& hpt) {
  const DenseMatrix& h = hpt.matrix;
  if (!h.is_square()) throw ValidationError("hpt_spectrum: matrix must be square");
  const std::size_t n = h.rows();
  constexpr double kShapeTol = 1e-14;
  DenseMatrix i_antisym(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const Complex v = h(r, c);
      const double a = r == c ? v.real() - 0.5 : v.real();
      if (std::abs(v.imag()) > kShapeTol) throw ValidationError("hpt_spectrum: matrix is not real");
      if (std::abs(a + (r == c ? h(c, r).real() - 0.5 : h(c, r).real())) > kShapeTol)
        throw ValidationError("hpt_spectrum: matrix is not (1/2) I + antisymmetric");
      i_antisym(r, c) = kI * a;
    }
  }
  const auto kappa = numerics::hermitian_eigenvalues(i_antisym);
  std::vector<Complex> out;
  out.reserve(n);
  for (double k : kappa) out.emplace_back(0.5, -k);
  return out;
}

std::vector<Complex> hermitian_part_spectrum(const OperatorMatrix& op) {
  const auto evals = numerics::hermitian_eigenvalues(numerics::hermitian_part(op.matrix));
  return std::vector<Complex>(evals.begin(), evals.end());
}

double halfline_y_max(int ny) { return std::sqrt(2.0 * (2.0 * ny + 1.0)) + 10.0; }

HalflineElements halfline_elements(int ny, int nodes, double y_max) {
  require_size(ny, 1, "halfline_elements");
  if (nodes < 2) throw ValidationError("halfline_elements: need at least two quadrature nodes");
  if (!(y_max > 0.0)) throw ValidationError("halfline_elements: y_max must be positive");
  const auto rule = numerics::gauss_legendre(nodes, 0.0, y_max);
  const int top = 2 * ny - 1;  // highest Hermite index used
  std::vector<double> p(ny * ny, 0.0), yp(ny * ny, 0.0), y(ny * ny, 0.0), ov(ny * ny, 0.0);
  std::vector<double> chi(ny), dchi(ny);
  for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
    const double yq = rule.nodes[q];
    const double w = rule.weights[q];
    const auto h = numerics::hermite_functions(top + 1, yq);
    for (int k = 0; k < ny; ++k) {
      const int n = 2 * k + 1;
      chi[k] = std::sqrt(2.0) * h[n];
      dchi[k] = std::sqrt(2.0) * (std::sqrt(n / 2.0) * h[n - 1] - std::sqrt((n + 1) / 2.0) * h[n + 1]);
    }
    for (int m = 0; m < ny; ++m) {
      const double wm = w * chi[m];
      for (int k = 0; k < ny; ++k) {
        p[m * ny + k] += wm * dchi[k];
        yp[m * ny + k] += wm * yq * dchi[k];
        y[m * ny + k] += wm * yq * chi[k];
        ov[m * ny + k] += wm * chi[k];
      }
    }
  }
  HalflineElements out{DenseMatrix(ny, ny), DenseMatrix(ny, ny), DenseMatrix(ny, ny), DenseMatrix(ny, ny)};
  for (int m = 0; m < ny; ++m)
    for (int k = 0; k < ny; ++k) {
      out.p(m, k) = -kI * p[m * ny + k];
      out.yp(m, k) = -kI * yp[m * ny + k];
      out.y(m, k) = y[m * ny + k];
      out.overlap(m, k) = ov[m * ny + k];
    }
  return out;
}

OperatorMatrix build_okubo(int nx, int ny, const OkuboOptions& options) {
  require_size(nx, 4, "build_okubo");
  require_size(ny, 4, "build_okubo");
  if (!(options.beta > 0.0 && options.beta < 1.0)) throw ValidationError("build_okubo: beta must lie in (0, 1)");
  if (options.nodes_per_level < 1) throw ValidationError("build_okubo: nodes_per_level must be positive");

  const auto half = halfline_elements(ny, options.nodes_per_level * ny, halfline_y_max(ny));
  const DenseMatrix px = momentum_matrix(nx);
  const DenseMatrix xpx = xp_normal_ordered(nx);
  const std::size_t dim = static_cast<std::size_t>(nx) * ny;

  DenseMatrix h = kron(px, half.p) * Complex(-1.0);
  h -= kron(xpx, DenseMatrix::identity(ny)) * Complex(1.0 - options.beta);
  h -= kron(DenseMatrix::identity(nx), half.yp) * Complex(options.beta);
  for (std::size_t i = 0; i < dim; ++i) h(i, i) += Complex(0.0, 0.5);

  OperatorMatrix op;
  op.hermiticity_defect = numerics::hermiticity_defect(h);
  if (op.hermiticity_defect > options.abort_defect)
    throw NumericalError("build_okubo: hermiticity defect " + std::to_string(op.hermiticity_defect) +
                         " exceeds abort threshold " + std::to_string(options.abort_defect));
  op.matrix = numerics::hermitian_part(h);
  op.basis = {BasisSpec{nx, BasisKind::kFullOscillator}, BasisSpec{ny, BasisKind::kOddOscillatorHalfline}};
  return op;
}

int okubo_side_for_size(int n) {
  const int side = static_cast<int>(std::lround(std::sqrt(static_cast<double>(n))));
  return side < 4 ? 4 : side;
}

}  // namespace gpue::xp
