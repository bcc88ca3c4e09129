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

#include "gpue/xp/ladder.hpp"

#include <cmath>
#include <numbers>

#include "gpue/error.hpp"

namespace gpue::xp {

namespace {

void require_size(int n, int min, const char* who) {
  if (n < min) throw ValidationError(std::string(who) + ": basis size must be at least " + std::to_string(min));
}

}  // namespace

LadderPair ladder_ops(int n) {
  require_size(n, 2, "ladder_ops");
  DenseMatrix a(n, n);
  for (int k = 1; k < n; ++k) a(k - 1, k) = std::sqrt(static_cast<double>(k));
  LadderPair out;
  out.a_dag.matrix = a.adjoint();
  out.a.matrix = std::move(a);
  out.a.basis = out.a_dag.basis = {BasisSpec{n, BasisKind::kFullOscillator}};
  out.a.hermiticity_defect = numerics::hermiticity_defect(out.a.matrix);
  out.a_dag.hermiticity_defect = out.a.hermiticity_defect;
  return out;
}

DenseMatrix position_matrix(int n) {
  const auto [a, a_dag] = ladder_ops(n);
  return (a.matrix + a_dag.matrix) * Complex(std::numbers::sqrt2 / 2.0);
}

DenseMatrix momentum_matrix(int n) {
  const auto [a, a_dag] = ladder_ops(n);
  return (a_dag.matrix - a.matrix) * Complex(0.0, std::numbers::sqrt2 / 2.0);
}

DenseMatrix xp_normal_ordered(int n) {
  require_size(n, 2, "xp_normal_ordered");
  DenseMatrix out(n, n);
  const Complex half_i{0.0, 0.5};
  for (int k = 0; k < n; ++k) out(k, k) = half_i;
  for (int k = 0; k + 2 < n; ++k) {
    const double c = std::sqrt(static_cast<double>(k + 1) * (k + 2));
    out(k + 2, k) = half_i * c;   // a†^2 : |k> -> |k+2>
    out(k, k + 2) = -half_i * c;  // -a^2
  }
  return out;
}

DenseMatrix xp_truncated_product(int n) { return position_matrix(n) * momentum_matrix(n); }

}  // namespace gpue::xp
