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

#include "gpue/numerics/dense_matrix.hpp"

#include <algorithm>
#include <cmath>

#include "gpue/error.hpp"

namespace gpue::numerics {

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

DenseMatrix::DenseMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw ValidationError("DenseMatrix: ragged initializer");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

DenseMatrix DenseMatrix::diagonal(std::span<const Complex> diag) {
  DenseMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

DenseMatrix DenseMatrix::diagonal(std::span<const double> diag) {
  DenseMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

DenseMatrix DenseMatrix::adjoint() const {
  DenseMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

DenseMatrix DenseMatrix::transpose() const {
  DenseMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

Complex DenseMatrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

double DenseMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

DenseMatrix& DenseMatrix::operator+=(const DenseMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw ValidationError("DenseMatrix +=: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

DenseMatrix& DenseMatrix::operator-=(const DenseMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw ValidationError("DenseMatrix -=: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
  return *this;
}

DenseMatrix& DenseMatrix::operator*=(Complex scale) {
  for (auto& z : data_) z *= scale;
  return *this;
}

DenseMatrix operator*(const DenseMatrix& lhs, const DenseMatrix& rhs) {
  if (lhs.cols_ != rhs.rows_) throw ValidationError("DenseMatrix *: shape mismatch");
  DenseMatrix out(lhs.rows_, rhs.cols_);
  for (std::size_t i = 0; i < lhs.rows_; ++i) {
    for (std::size_t k = 0; k < lhs.cols_; ++k) {
      const Complex a = lhs(i, k);
      if (a == Complex{}) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  }
  return out;
}

std::vector<Complex> DenseMatrix::apply(std::span<const Complex> v) const {
  if (v.size() != cols_) throw ValidationError("DenseMatrix::apply: shape mismatch");
  std::vector<Complex> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Complex acc = 0.0;
    for (std::size_t c = 0; c < cols_; ++c) acc += (*this)(r, c) * v[c];
    out[r] = acc;
  }
  return out;
}

std::vector<Complex> DenseMatrix::column(std::size_t c) const {
  std::vector<Complex> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

DenseMatrix kron(const DenseMatrix& lhs, const DenseMatrix& rhs) {
  DenseMatrix out(lhs.rows() * rhs.rows(), lhs.cols() * rhs.cols());
  for (std::size_t i = 0; i < lhs.rows(); ++i)
    for (std::size_t j = 0; j < lhs.cols(); ++j) {
      const Complex a = lhs(i, j);
      if (a == Complex{}) continue;
      for (std::size_t k = 0; k < rhs.rows(); ++k)
        for (std::size_t l = 0; l < rhs.cols(); ++l)
          out(i * rhs.rows() + k, j * rhs.cols() + l) = a * rhs(k, l);
    }
  return out;
}

double hermiticity_defect(const DenseMatrix& a) {
  if (!a.is_square()) throw ValidationError("hermiticity_defect: matrix not square");
  const double scale = a.frobenius_norm();
  if (scale == 0.0) return 0.0;
  double s = 0.0;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) s += std::norm(a(r, c) - std::conj(a(c, r)));
  return std::sqrt(s) / scale;
}

DenseMatrix hermitian_part(const DenseMatrix& a) {
  if (!a.is_square()) throw ValidationError("hermitian_part: matrix not square");
  DenseMatrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = 0.5 * (a(r, c) + std::conj(a(c, r)));
  return out;
}

DenseMatrix inverse2(const DenseMatrix& a) {
  if (a.rows() != 2 || a.cols() != 2) throw ValidationError("inverse2: matrix is not 2x2");
  const Complex det = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
  if (std::abs(det) <= 1e-300) throw NumericalError("inverse2: singular matrix");
  return DenseMatrix{{a(1, 1) / det, -a(0, 1) / det}, {-a(1, 0) / det, a(0, 0) / det}};
}

Eigen2 eigenvalues2(const DenseMatrix& a) {
  if (a.rows() != 2 || a.cols() != 2) throw ValidationError("eigenvalues2: matrix is not 2x2");
  const Complex mean = 0.5 * (a(0, 0) + a(1, 1));
  const Complex half_gap = 0.5 * (a(0, 0) - a(1, 1));
  const Complex disc = std::sqrt(half_gap * half_gap + a(0, 1) * a(1, 0));
  Eigen2 e{mean + disc, mean - disc};
  if (e.second.real() > e.first.real()) std::swap(e.first, e.second);
  return e;
}

std::vector<Complex> eigenvector2(const DenseMatrix& a, Complex lambda) {
  std::vector<Complex> v1{a(0, 1), lambda - a(0, 0)};
  std::vector<Complex> v2{lambda - a(1, 1), a(1, 0)};
  const double n1 = norm2(v1);
  const double n2 = norm2(v2);
  auto& v = n1 >= n2 ? v1 : v2;
  const double n = std::max(n1, n2);
  if (n == 0.0) return {1.0, 0.0};
  for (auto& z : v) z /= n;
  return v;
}

double norm2(std::span<const Complex> v) {
  double s = 0.0;
  for (const auto& z : v) s += std::norm(z);
  return std::sqrt(s);
}

Complex inner(std::span<const Complex> u, std::span<const Complex> v) {
  if (u.size() != v.size()) throw ValidationError("inner: length mismatch");
  Complex acc = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) acc += std::conj(u[i]) * v[i];
  return acc;
}

}  // namespace gpue::numerics
