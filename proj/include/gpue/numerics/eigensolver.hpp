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

#ifndef GPUE_NUMERICS_EIGENSOLVER_HPP_
#define GPUE_NUMERICS_EIGENSOLVER_HPP_

#include <vector>

#include "gpue/numerics/dense_matrix.hpp"

namespace gpue::numerics {

struct HermitianSpectrum {
  std::vector<double> eigenvalues;  // ascending
  DenseMatrix eigenvectors;         // column j pairs with eigenvalues[j]; empty if not requested
};

struct EigensolveOptions {
  bool compute_vectors = true;
  // Input is rejected when ‖A − A†‖_F > hermitian_tol · ‖A‖_F.
  double hermitian_tol = 1e-12;
  int max_sweeps = 60;
};

// Cyclic Jacobi diagonalization of a complex Hermitian matrix.
//
// Each rotation zeroes one off-diagonal pair (p, q) after absorbing the phase
// of A_pq; sweeps continue until the off-diagonal Frobenius mass falls below
// machine epsilon relative to ‖A‖_F. Only the Hermitian part of the input is
// used. Throws ValidationError for non-square or non-Hermitian input and
// NumericalError if max_sweeps is exhausted.
HermitianSpectrum hermitian_eigensolve(const DenseMatrix& a, const EigensolveOptions& options = {});

// Eigenvalues only; skips eigenvector accumulation.
std::vector<double> hermitian_eigenvalues(const DenseMatrix& a, double hermitian_tol = 1e-12);

}  // namespace gpue::numerics

#endif  // GPUE_NUMERICS_EIGENSOLVER_HPP_
