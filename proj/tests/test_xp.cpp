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

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "gpue/error.hpp"
#include "gpue/numerics/eigensolver.hpp"
#include "gpue/numerics/special_functions.hpp"
#include "gpue/xp/convergence.hpp"
#include "gpue/xp/eigenfunction.hpp"
#include "gpue/xp/hamiltonians.hpp"
#include "gpue/xp/ladder.hpp"

using namespace gpue;
using namespace gpue::xp;

TEST_CASE("ladder operators satisfy the truncated commutator") {
  const int n = 12;
  const auto [a, ad] = ladder_ops(n);
  const auto comm = a.matrix * ad.matrix - ad.matrix * a.matrix;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double want = i != j ? 0.0 : (i == n - 1 ? -(n - 1.0) : 1.0);
      CHECK(std::abs(comm(i, j) - Complex(want)) < 1e-13);
    }
  CHECK(std::abs(a.matrix(2, 3) - Complex(std::sqrt(3.0))) < 1e-15);
  CHECK_THROWS_AS(ladder_ops(1), ValidationError);
}

TEST_CASE("position and momentum matrices match hermite-function integrals") {
  const int n = 6;
  const auto x = position_matrix(n);
  const auto p = momentum_matrix(n);
  CHECK(numerics::hermiticity_defect(x) < 1e-15);
  CHECK(numerics::hermiticity_defect(p) < 1e-15);
  // <m|x|k> and <m|p|k> = -i <m|d/dx|k> by trapezoid on a wide grid.
  const double h = 0.005;
  for (int m = 0; m < n; ++m)
    for (int k = 0; k < n; ++k) {
      double xs = 0.0, ds = 0.0;
      for (double t = -12.0; t <= 12.0; t += h) {
        const auto f = numerics::hermite_functions(n, t);
        const auto d = numerics::hermite_function_derivatives(n, t);
        xs += f[m] * t * f[k] * h;
        ds += f[m] * d[k] * h;
      }
      CHECK(std::abs(x(m, k) - Complex(xs)) < 1e-10);
      CHECK(std::abs(p(m, k) - Complex(0.0, -ds)) < 1e-10);
    }
}

TEST_CASE("normal-ordered xp agrees with the truncated product away from the corner") {
  const int n = 10;
  const auto closed = xp_normal_ordered(n);
  const auto product = xp_truncated_product(n);
  for (int i = 0; i < n - 1; ++i)
    for (int j = 0; j < n - 1; ++j) CHECK(std::abs(closed(i, j) - product(i, j)) < 1e-13);
  CHECK(std::abs(closed(n - 1, n - 1) - product(n - 1, n - 1)) > 0.1);
}

TEST_CASE("H_BK is Hermitian with a spectrum symmetric about zero") {
  for (int n : {16, 64}) {
    const auto h = build_hbk(n);
    CHECK(h.hermiticity_defect < 1e-15);
    const auto ev = numerics::hermitian_eigenvalues(h.matrix);
    for (std::size_t i = 0; i < ev.size(); ++i) CHECK(std::abs(ev[i] + ev[ev.size() - 1 - i]) < 1e-10);
  }
  const auto t = build_hbk(16, ProductForm::kTruncatedProduct);
  CHECK(t.hermiticity_defect > 0.0);
  CHECK_THROWS_AS(build_hbk(3), ValidationError);
}

TEST_CASE("H_PT eigenvalues have real part one half") {
  for (int n : {16, 64, 256}) {
    const auto ev = hpt_spectrum(build_hpt(n));
    CHECK(ev.size() == static_cast<std::size_t>(n));
    for (const auto& z : ev) CHECK(std::abs(z.real() - 0.5) < 1e-12);
  }
  CHECK_THROWS_AS(hpt_spectrum(build_hbk(8)), ValidationError);
}

TEST_CASE("half-line basis overlap is the identity") {
  const int ny = 6;
  const auto el = halfline_elements(ny, 16 * ny, halfline_y_max(ny));
  for (int i = 0; i < ny; ++i)
    for (int j = 0; j < ny; ++j) CHECK(std::abs(el.overlap(i, j) - Complex(i == j ? 1.0 : 0.0)) < 1e-12);
  CHECK(numerics::hermiticity_defect(el.y) < 1e-12);
  CHECK(numerics::hermiticity_defect(el.p) < 1e-12);
  const auto coarse = halfline_elements(ny, 8 * ny, halfline_y_max(ny));
  CHECK(numerics::hermiticity_defect(coarse.p) < 1e-8);
}

TEST_CASE("Okubo hermiticity defect decreases with quadrature nodes") {
  double previous = 1e300;
  for (int factor : {1, 2, 3, 4, 6, 8, 16}) {
    OkuboOptions opts;
    opts.nodes_per_level = factor;
    opts.abort_defect = 1e3;
    const auto h = build_okubo(8, 8, opts);
    CAPTURE(factor);
    CHECK(h.hermiticity_defect < previous);
    previous = h.hermiticity_defect;
  }
  CHECK(previous < 1e-13);
  OkuboOptions coarse;
  coarse.nodes_per_level = 1;
  CHECK_THROWS_AS(build_okubo(8, 8, coarse), NumericalError);
  OkuboOptions bad_beta;
  bad_beta.beta = 1.5;
  CHECK_THROWS_AS(build_okubo(4, 4, bad_beta), ValidationError);
}

TEST_CASE("Okubo side length per ladder size") {
  CHECK(okubo_side_for_size(64) == 8);
  CHECK(okubo_side_for_size(128) == 11);
  CHECK(okubo_side_for_size(256) == 16);
  CHECK(okubo_side_for_size(512) == 23);
  CHECK(okubo_side_for_size(4) == 4);
}

TEST_CASE("convergence ladder on the diagonal control family") {
  const std::vector<int> sizes{16, 32, 64};
  const auto r = convergence_ladder(diagonal_control_spectrum, sizes, 10, TrackBy::kSmallestAbs);
  CHECK(r.converged);
  for (double d : r.drift) CHECK(d == 0.0);
  CHECK(r.tracked.size() == 3);
  CHECK(r.tracked[0].size() == 10);
  const std::vector<int> unsorted{32, 16};
  CHECK_THROWS_AS(convergence_ladder(diagonal_control_spectrum, unsorted, 4, TrackBy::kSmallestAbs), ValidationError);
  const std::vector<int> single{16};
  CHECK_THROWS_AS(convergence_ladder(diagonal_control_spectrum, single, 4, TrackBy::kSmallestAbs), ValidationError);
  CHECK_THROWS_AS(convergence_ladder(diagonal_control_spectrum, sizes, 17, TrackBy::kSmallestAbs), ValidationError);
}

TEST_CASE("tracked eigenvalues break modulus ties deterministically") {
  const auto noisy = [](double sign) {
    return [sign](int n) {
      std::vector<Complex> ev{Complex(1.0 + sign * 1e-14), Complex(-1.0), Complex(3.0)};
      for (int i = 3; i < n; ++i) ev.emplace_back(10.0 + i);
      return ev;
    };
  };
  const std::vector<int> sizes{4, 5};
  for (double sign : {1.0, -1.0}) {
    const auto r = convergence_ladder(noisy(sign), sizes, 1, TrackBy::kSmallestAbs);
    CHECK(r.tracked[0][0] == Complex(-1.0));
    CHECK(r.converged);
  }
}

TEST_CASE("H_BK ladder drift regression") {
  const std::vector<int> sizes{64, 128, 256, 512};
  const auto r = convergence_ladder([](int n) { return hbk_ladder_spectrum(n); }, sizes, 10, TrackBy::kSmallestAbs);
  CHECK_FALSE(r.converged);
  const double frozen[] = {0.57072439329756453, 0.45984133476888811, 0.38218636795982541};
  for (int i = 0; i < 3; ++i) CHECK(std::abs(r.drift[i] - frozen[i]) < 1e-9);
}

TEST_CASE("H_PT ladder keeps Re = 1/2 while imaginary parts drift") {
  const std::vector<int> sizes{16, 32, 64};
  const auto r = convergence_ladder(hpt_ladder_spectrum, sizes, 6, TrackBy::kSmallestAbsImag);
  CHECK_FALSE(r.converged);
  for (const auto& row : r.tracked)
    for (const auto& z : row) CHECK(std::abs(z.real() - 0.5) < 1e-12);
}

TEST_CASE("Okubo ladder drift regression on a small ladder") {
  const std::vector<int> sizes{16, 32, 64};
  const auto r = convergence_ladder([](int n) { return okubo_ladder_spectrum(n); }, sizes, 5, TrackBy::kSmallestAbs);
  CHECK_FALSE(r.converged);
  CHECK(std::abs(r.drift[0] - 0.40488037984604119) < 1e-9);
  CHECK(std::abs(r.drift[1] - 0.19101720908076619) < 1e-9);
}

TEST_CASE("power-law eigenfunction residual converges at second order") {
  HalfLineGrid coarse;
  coarse.n_points = 1501;
  HalfLineGrid fine = coarse;
  fine.n_points = 3001;
  for (double t : {0.0, 1.0, 14.134725}) {
    const double rc = hpt_eigenfunction_residual(t, coarse);
    const double rf = hpt_eigenfunction_residual(t, fine);
    CAPTURE(t);
    CHECK(std::abs(std::log2(rc / rf) - 2.0) < 0.05);
  }
  HalfLineGrid touching;
  touching.x_min = 0.0;
  CHECK_THROWS_AS(hpt_eigenfunction_residual(1.0, touching), ValidationError);
}

TEST_CASE("PT symmetry of the power-law eigenfunction is broken for t != 0") {
  CHECK(pt_breaking_check(1.0, 0.5, 2.0));
  CHECK_FALSE(pt_breaking_check(0.0, 0.5, 2.0));
  for (double x : {0.3, 1.0, 4.0}) CHECK(std::abs(std::abs(pt_image_ratio(1.0, x)) - 1.0) < 1e-14);
  const Complex psi = hpt_eigenfunction(2.0, 1.7);
  CHECK(std::abs(std::abs(psi) - 1.0 / std::sqrt(1.7)) < 1e-15);
}
