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

#ifndef GPUE_NUMERICS_DENSE_MATRIX_HPP_
#define GPUE_NUMERICS_DENSE_MATRIX_HPP_

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace gpue::numerics {

using Complex = std::complex<double>;

// Row-major dense complex matrix.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols);
  // Row-major nested initializer, e.g. {{1, 2}, {3, 4}}.
  DenseMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static DenseMatrix identity(std::size_t n);
  static DenseMatrix diagonal(std::span<const Complex> diag);
  static DenseMatrix diagonal(std::span<const double> diag);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Complex> data() { return data_; }
  std::span<const Complex> data() const { return data_; }

  DenseMatrix adjoint() const;
  DenseMatrix transpose() const;
  Complex trace() const;
  double frobenius_norm() const;

  DenseMatrix& operator+=(const DenseMatrix& rhs);
  DenseMatrix& operator-=(const DenseMatrix& rhs);
  DenseMatrix& operator*=(Complex scale);

  friend DenseMatrix operator+(DenseMatrix lhs, const DenseMatrix& rhs) { return lhs += rhs; }
  friend DenseMatrix operator-(DenseMatrix lhs, const DenseMatrix& rhs) { return lhs -= rhs; }
  friend DenseMatrix operator*(DenseMatrix lhs, Complex scale) { return lhs *= scale; }
  friend DenseMatrix operator*(Complex scale, DenseMatrix rhs) { return rhs *= scale; }
  friend DenseMatrix operator*(const DenseMatrix& lhs, const DenseMatrix& rhs);

  std::vector<Complex> apply(std::span<const Complex> v) const;
  std::vector<Complex> column(std::size_t c) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

// Kronecker product lhs ⊗ rhs; index (i*rhs.rows()+k, j*rhs.cols()+l).
DenseMatrix kron(const DenseMatrix& lhs, const DenseMatrix& rhs);

// ‖A − A†‖_F / ‖A‖_F, zero for the zero matrix.
double hermiticity_defect(const DenseMatrix& a);

// (A + A†) / 2.
DenseMatrix hermitian_part(const DenseMatrix& a);

// Inverse of a 2x2 matrix by the adjugate. Throws NumericalError when
// |det| <= 1e-300.
DenseMatrix inverse2(const DenseMatrix& a);

// Both roots of the characteristic polynomial of a general 2x2 matrix,
// ordered by descending real part.
struct Eigen2 {
  Complex first;
  Complex second;
};
Eigen2 eigenvalues2(const DenseMatrix& a);

// Right eigenvector of a 2x2 matrix for eigenvalue lambda, unit 2-norm.
std::vector<Complex> eigenvector2(const DenseMatrix& a, Complex lambda);

double norm2(std::span<const Complex> v);

// u† v
Complex inner(std::span<const Complex> u, std::span<const Complex> v);

}  // namespace gpue::numerics

#endif  // GPUE_NUMERICS_DENSE_MATRIX_HPP_
