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

#ifndef GPUE_ENSEMBLE_MATRIX_ALGEBRA_HPP_
#define GPUE_ENSEMBLE_MATRIX_ALGEBRA_HPP_

#include <array>

#include "gpue/numerics/dense_matrix.hpp"

namespace gpue::ensemble {

using numerics::Complex;
using numerics::DenseMatrix;

// One ensemble member
//
//   H = [[a + b,           (c + i d) / eps],
//        [(c - i d) eps,    a - b         ]]
//
// pseudo-Hermitian with respect to eta = diag(eps, 1/eps).
struct MatrixABCD {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;
  double epsilon = 1.0;
};

struct EigenPair2 {
  double e_plus = 0.0;
  double e_minus = 0.0;
};

// Spectral coordinates: t = E+ + E-, s = E+ - E-, theta in [0, pi/2],
// phi in [0, 2 pi).
struct DecompParams {
  double t = 0.0;
  double s = 0.0;
  double theta = 0.0;
  double phi = 0.0;
};

using StateVector2 = std::array<Complex, 2>;

DenseMatrix realize(const MatrixABCD& m);
// diag(eps, 1/eps); ValidationError unless eps > 0.
DenseMatrix build_metric(double epsilon);

// a ± sqrt(b^2 + c^2 + d^2); always real.
EigenPair2 eigenvalues2(const MatrixABCD& m);
inline double spacing(const EigenPair2& e) { return e.e_plus - e.e_minus; }

DecompParams decompose(const MatrixABCD& m);
MatrixABCD reconstruct(const DecompParams& dp, double epsilon);

// [[cos th, -sin th e^{i phi}/eps], [sin th e^{-i phi} eps, cos th]].
// det D = 1 for every angle, so D is never singular.
DenseMatrix build_D(double theta, double phi, double epsilon);

// ‖eta H eta^{-1} - H†‖_F. eta must be diagonal with nonzero entries.
double pseudo_hermiticity_residual(const DenseMatrix& h, const DenseMatrix& eta);

// ‖D† - eta D^{-1} eta^{-1}‖_F for 2x2 D.
double pseudo_unitarity_residual(const DenseMatrix& d, const DenseMatrix& eta);

// |lambda_1 lambda_2| of a 2x2 matrix.
double eigenvalue_product_modulus(const DenseMatrix& d);

// ‖realize(reconstruct(dp)) - D diag(E+, E-) D^{-1}‖_F.
double reconstruction_residual(const DecompParams& dp, double epsilon);

// v† eta v (imaginary part dropped; it vanishes for Hermitian eta).
double pseudo_norm(const StateVector2& v, const DenseMatrix& eta);

struct EtaOrthogonality {
  double overlap = 0.0;       // |<psi+| eta psi->|
  double norm_product = 0.0;  // ‖psi+‖ ‖psi-‖
  bool degenerate = false;    // eigenvalue gap below 1e-12: overlap carries no guarantee
  Complex lambda_plus;
  Complex lambda_minus;
};

// Eigenvectors of the 2x2 H, paired with their eta-overlap.
EtaOrthogonality eta_orthogonality(const DenseMatrix& h, const DenseMatrix& eta);

// |det| of the central-difference Jacobian of (t, s, theta, phi) -> (a, b, c, d).
// Requires s > 0 and theta strictly inside (0, pi/2); throws ValidationError
// for theta within 1e-9 of either end, where the step degenerates.
double jacobian_numeric(const DecompParams& dp);

}  // namespace gpue::ensemble

#endif  // GPUE_ENSEMBLE_MATRIX_ALGEBRA_HPP_
