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

#ifndef GPUE_XP_LADDER_HPP_
#define GPUE_XP_LADDER_HPP_

#include <vector>

#include "gpue/numerics/dense_matrix.hpp"

namespace gpue::xp {

using numerics::Complex;
using numerics::DenseMatrix;

enum class BasisKind {
  kFullOscillator,          // h_0 .. h_{N-1} on the real line
  kOddOscillatorHalfline,   // chi_k = sqrt(2) h_{2k+1} on y > 0, chi_k(0) = 0
};

struct BasisSpec {
  int size = 0;
  BasisKind kind = BasisKind::kFullOscillator;
};

// A truncated operator together with the basis it lives in. Tensor-product
// operators carry one BasisSpec per factor.
struct OperatorMatrix {
  DenseMatrix matrix;
  std::vector<BasisSpec> basis;
  double hermiticity_defect = 0.0;  // ‖A - A†‖_F / ‖A‖_F
};

struct LadderPair {
  OperatorMatrix a;      // a[n-1, n] = sqrt(n)
  OperatorMatrix a_dag;  // transpose of a
};

LadderPair ladder_ops(int n);

// x = (a + a†)/sqrt 2 and p = i(a† - a)/sqrt 2, truncated.
DenseMatrix position_matrix(int n);
DenseMatrix momentum_matrix(int n);

// xp in normal-ordered closed form (i/2)(I + a†^2 - a^2). Unlike the
// product of truncated x and p it has no corner artifact.
DenseMatrix xp_normal_ordered(int n);
// position_matrix(n) * momentum_matrix(n); differs from the closed form in
// the last diagonal entry.
DenseMatrix xp_truncated_product(int n);

}  // namespace gpue::xp

#endif  // GPUE_XP_LADDER_HPP_
