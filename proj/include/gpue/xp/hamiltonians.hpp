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

#ifndef GPUE_XP_HAMILTONIANS_HPP_
#define GPUE_XP_HAMILTONIANS_HPP_

#include <vector>

#include "gpue/xp/ladder.hpp"

namespace gpue::xp {

enum class ProductForm { kNormalOrdered, kTruncatedProduct };

// H_BK = xp - i/2 = (i/2)(a†^2 - a^2) in the oscillator basis: purely
// imaginary, couples n <-> n+2, Hermitian. The truncated-product form keeps
// the corner artifact, so it is not Hermitian; its defect is recorded.
OperatorMatrix build_hbk(int n, ProductForm form = ProductForm::kNormalOrdered);

// H_PT = -i xp = (1/2)(I + a†^2 - a^2): real, (1/2) I plus a real
// antisymmetric part.
OperatorMatrix build_hpt(int n, ProductForm form = ProductForm::kNormalOrdered);

// Spectrum of an H_PT-shaped matrix (1/2) I + A with A real antisymmetric:
// iA is Hermitian with eigenvalues kappa, and lambda = 1/2 - i kappa. The
// real part is exactly 1/2 by construction. ValidationError when the input
// does not have that shape (within 1e-14).
std::vector<Complex> hpt_spectrum(const OperatorMatrix& hpt);

// Eigenvalues of (A + A†)/2, as complex numbers with zero imaginary part.
std::vector<Complex> hermitian_part_spectrum(const OperatorMatrix& op);

// Half-line matrix elements on chi_k(y) = sqrt(2) h_{2k+1}(y), y in [0, y_max],
// by Gauss-Legendre quadrature with `nodes` points:
//   p[m][n]  = -i ∫ chi_m chi_n' dy
//   yp[m][n] = -i ∫ y chi_m chi_n' dy
//   y[m][n]  =    ∫ y chi_m chi_n dy
//   overlap  =    ∫ chi_m chi_n dy
struct HalflineElements {
  DenseMatrix p;
  DenseMatrix yp;
  DenseMatrix y;
  DenseMatrix overlap;
};

// sqrt(2 (2 ny + 1)) + 10: past the classical turning point of the top
// basis function plus a Gaussian margin.
double halfline_y_max(int ny);
HalflineElements halfline_elements(int ny, int nodes, double y_max);

struct OkuboOptions {
  double beta = 0.5;
  int nodes_per_level = 8;  // quadrature nodes = nodes_per_level * ny
  double abort_defect = 0.1;
};

// H = -p_x p_y - (1 - beta) x p_x - beta y p_y + i/2 on the full x-basis
// (size nx) tensor the odd half-line y-basis (size ny); index nx_i * ny + k.
// x p_x uses the normal-ordered closed form, p_y and y p_y the half-line
// quadrature. The returned matrix is (A + A†)/2; hermiticity_defect is the
// defect of A before symmetrization. NumericalError if that defect exceeds
// abort_defect.
OperatorMatrix build_okubo(int nx, int ny, const OkuboOptions& options = {});

// Ladder size N -> (nx, ny) for the Okubo tensor basis: nx = ny = round(sqrt N),
// at least 4, so the matrix dimension tracks N.
int okubo_side_for_size(int n);

}  // namespace gpue::xp

#endif  // GPUE_XP_HAMILTONIANS_HPP_
