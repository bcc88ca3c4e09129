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
#include <numbers>
#include <vector>

#include "gpue/ensemble/gamma_shape.hpp"
#include "gpue/ensemble/matrix_algebra.hpp"
#include "gpue/ensemble/sampler.hpp"
#include "gpue/ensemble/spacing_density.hpp"
#include "gpue/error.hpp"
#include "gpue/numerics/rng.hpp"
#include "gpue/stats/ks.hpp"
#include "gpue/stats/spacing_sample.hpp"

using namespace gpue;
using namespace gpue::ensemble;
using numerics::Complex;

namespace {

constexpr double kPi = std::numbers::pi;

double rel_err(double got, double want) { return std::abs(got - want) / std::abs(want); }

template <class F>
double simpson(F f, double lo, double hi, int panels) {
  const double h = (hi - lo) / panels;
  double sum = f(lo) + f(hi);
  for (int i = 1; i < panels; ++i) sum += (i % 2 ? 4.0 : 2.0) * f(lo + i * h);
  return sum * h / 3.0;
}

// Density of s = 2|(b, c, d)| for b ~ N(0, 1/2), c, d ~ N(0, 1/(2C)),
// integrated over the direction of (b, c, d) on the sphere; unnormalized.
double sphere_marginal(double cosh2g, double s) {
  const double r = 0.5 * s;
  const auto integrand = [&](double v) {
    const double cv = std::cos(v), sv = std::sin(v);
    return sv * std::exp(-r * r * cv * cv - cosh2g * r * r * sv * sv);
  };
  return r * r * simpson(integrand, 0.0, kPi, 4000);
}

MatrixABCD random_member(numerics::RngStream& rng, double epsilon) {
  return {rng.standard_normal(), rng.standard_normal(), rng.standard_normal(), rng.standard_normal(), epsilon};
}

}  // namespace

TEST_CASE("shape constants match reference values") {
  struct Row {
    double gamma, cosh2g, p, q, alpha;
  };
  // mpmath, 30 digits.
  const Row rows[] = {
      {0.0, 1.0, 0.5, 0.0, 2.2567583341910251},
      {0.1, 1.0200667556190758, 0.50499177112579662, 0.070828588188449454, 2.2419012969597908},
      {0.25, 1.1276259652063808, 0.53094867106114429, 0.17862388222630029, 2.1695904368199069},
      {0.5, 1.5430806348152438, 0.62110398380932234, 0.36847002415910435, 1.9698462945151876},
      {1.0, 3.7621956910836315, 0.96981901547191158, 0.83099273328405698, 1.5769041993158139},
      {2.0, 27.308232836016487, 2.6128639859365282, 2.5645775888056344, 1.2267817000273525},
  };
  for (const auto& r : rows) {
    CAPTURE(r.gamma);
    const auto s = shape_from_gamma(r.gamma);
    CHECK(rel_err(s.cosh2g, r.cosh2g) < 1e-14);
    CHECK(rel_err(s.p, r.p) < 1e-14);
    CHECK(std::abs(s.q - r.q) < 1e-15);
    CHECK(rel_err(s.alpha, r.alpha) < 1e-13);
    CHECK(rel_err(s.epsilon, std::exp(-r.gamma)) < 1e-15);
  }
  CHECK(rel_err(shape_from_gamma(0.0).alpha, 4.0 / std::sqrt(kPi)) < 1e-15);
  // The series branch at tiny gamma joins the closed form smoothly.
  CHECK(rel_err(shape_from_gamma(1e-7).alpha, 4.0 / std::sqrt(kPi)) < 1e-12);
  CHECK(shape_from_gamma(-0.5).alpha == shape_from_gamma(0.5).alpha);
}

TEST_CASE("spacing density: reference value and gamma = 0 limit") {
  CHECK(rel_err(analytic_spacing_pdf(shape_from_gamma(0.5), 1.0), 0.89903478515452606) < 1e-13);
  CHECK(rel_err(gue_surmise_pdf(1.0), 0.90758921091668139) < 1e-14);
  CHECK(rel_err(goe_surmise_pdf(1.0), 0.71618593634056915) < 1e-14);
  CHECK(rel_err(gue_surmise_pdf(std::sqrt(kPi) / 2.0), 8.0 / (kPi * std::exp(1.0))) < 1e-14);
  const auto g0 = shape_from_gamma(0.0);
  for (double x : {0.1, 0.7, 1.5, 3.0}) CHECK(rel_err(analytic_spacing_pdf(g0, x), gue_surmise_pdf(x)) < 1e-13);
  CHECK(analytic_spacing_pdf(g0, 0.0) == 0.0);
}

TEST_CASE("spacing density is normalized with unit mean") {
  for (double g : {0.0, 0.1, 0.5, 1.0, 2.0}) {
    const auto s = shape_from_gamma(g);
    const auto pdf = [&](double x) { return analytic_spacing_pdf(s, x); };
    CAPTURE(g);
    CHECK(std::abs(simpson(pdf, 0.0, 12.0, 24000) - 1.0) < 1e-10);
    CHECK(std::abs(simpson([&](double x) { return x * pdf(x); }, 0.0, 12.0, 24000) - 1.0) < 1e-10);
  }
}

TEST_CASE("spacing density agrees with the sphere marginal of the Gaussian measure") {
  for (double g : {0.25, 1.0, 2.0}) {
    const auto sh = shape_from_gamma(g);
    const auto m = [&](double s) { return sphere_marginal(sh.cosh2g, s); };
    const double norm = simpson(m, 0.0, 20.0, 4000);
    const double mean = simpson([&](double s) { return s * m(s); }, 0.0, 20.0, 4000) / norm;
    CHECK(rel_err(mean, sh.alpha) < 1e-9);
    for (double x : {0.2, 0.8, 1.3, 2.5}) {
      CAPTURE(g);
      CAPTURE(x);
      CHECK(std::abs(mean * m(mean * x) / norm - analytic_spacing_pdf(sh, x)) < 1e-9);
    }
  }
}

TEST_CASE("spacing density switches to the Dawson form continuously") {
  const auto sh = shape_from_gamma(2.0);
  const double x_switch = 6.0 / (sh.alpha * sh.q);
  const double below = analytic_spacing_pdf(sh, x_switch * (1 - 1e-12));
  const double above = analytic_spacing_pdf(sh, x_switch * (1 + 1e-12));
  CHECK(rel_err(below, above) < 1e-10);
  CHECK(std::isfinite(analytic_spacing_pdf(sh, 40.0)));
  CHECK(analytic_spacing_pdf(sh, 40.0) >= 0.0);
}

TEST_CASE("closed-form CDF is the integral of the density") {
  for (double g : {0.0, 0.5, 1.0, 2.0}) {
    const auto s = shape_from_gamma(g);
    for (double x : {0.3, 1.0, 2.0, 3.5, 6.0}) {
      const double integral = simpson([&](double u) { return analytic_spacing_pdf(s, u); }, 0.0, x, 6000);
      CAPTURE(g);
      CAPTURE(x);
      CHECK(std::abs(analytic_spacing_cdf(s, x) - integral) < 1e-12);
    }
    CHECK(std::abs(analytic_spacing_cdf(s, 30.0) - 1.0) < 1e-14);
  }
  for (double x : {0.5, 1.0, 2.0}) {
    CHECK(std::abs(gue_surmise_cdf(x) - simpson(gue_surmise_pdf, 0.0, x, 4000)) < 1e-13);
    CHECK(std::abs(goe_surmise_cdf(x) - simpson(goe_surmise_pdf, 0.0, x, 4000)) < 1e-13);
  }
}

TEST_CASE("marginal oracle is proportional to the q s / sigma Erfi argument") {
  const auto sh = shape_from_gamma(1.0);
  const double sigma = 1.3;
  std::vector<double> right, wrong;
  for (double s : {0.5, 1.5, 3.0}) {
    const double m = marginal_oracle(sh, s, sigma);
    right.push_back(unnormalized_spacing_density(sh, s, sigma, ErfiArgument::kQsOverSigma) / m);
    wrong.push_back(unnormalized_spacing_density(sh, s, sigma, ErfiArgument::kQsOverTwoSigma) / m);
  }
  CHECK(rel_err(right[1], right[0]) < 1e-9);
  CHECK(rel_err(right[2], right[0]) < 1e-9);
  CHECK(rel_err(wrong[2], wrong[0]) > 0.1);
}

TEST_CASE("normalized marginal oracle matches the closed form") {
  const auto sh = shape_from_gamma(0.5);
  const std::vector<double> xs{0.3, 1.0, 2.2};
  const auto curve = normalized_marginal_oracle(sh, xs);
  CHECK(rel_err(curve.mean_spacing, sh.alpha) < 1e-9);
  for (std::size_t i = 0; i < xs.size(); ++i) CHECK(std::abs(curve.pdf[i] - analytic_spacing_pdf(sh, xs[i])) < 1e-9);
}

TEST_CASE("eigenvalues of the 2x2 member are real and match numerics") {
  numerics::RngStream rng(21, 0);
  for (int i = 0; i < 200; ++i) {
    const auto m = random_member(rng, std::exp(-0.7));
    const auto e = eigenvalues2(m);
    const auto n = numerics::eigenvalues2(realize(m));
    CHECK(std::abs(n.first - Complex(e.e_plus)) < 1e-12 * (1 + std::abs(e.e_plus)));
    CHECK(std::abs(n.second - Complex(e.e_minus)) < 1e-12 * (1 + std::abs(e.e_minus)));
    CHECK(spacing(e) >= 0.0);
  }
}

TEST_CASE("pseudo-Hermiticity holds for members and fails for a generic matrix") {
  numerics::RngStream rng(22, 0);
  const double eps = std::exp(-0.5);
  const auto eta = build_metric(eps);
  for (int i = 0; i < 100; ++i) CHECK(pseudo_hermiticity_residual(realize(random_member(rng, eps)), eta) < 1e-13);
  const numerics::DenseMatrix generic{{1.0, 2.0}, {0.3, -1.0}};
  CHECK(pseudo_hermiticity_residual(generic, eta) > 0.1);
}

TEST_CASE("D is pseudo-unitary with unimodular eigenvalues") {
  const double eps = std::exp(-0.5);
  const auto d = build_D(kPi / 4, 0.0, eps);
  CHECK(pseudo_unitarity_residual(d, build_metric(eps)) <= 1e-13);
  CHECK(std::abs(eigenvalue_product_modulus(d) - 1.0) <= 1e-12);
  const auto e = numerics::eigenvalues2(d);
  CHECK(std::abs(std::abs(e.first) - 1.0) < 1e-12);
  CHECK(std::abs(std::abs(e.second) - 1.0) < 1e-12);
}

TEST_CASE("decompose and reconstruct round trip") {
  numerics::RngStream rng(23, 0);
  const double eps = std::exp(-0.3);
  for (int i = 0; i < 200; ++i) {
    const auto m = random_member(rng, eps);
    const auto dp = decompose(m);
    CHECK(dp.s >= 0.0);
    CHECK((dp.theta >= 0.0 && dp.theta <= kPi / 2));
    CHECK((dp.phi >= 0.0 && dp.phi < 2 * kPi));
    const auto back = reconstruct(dp, eps);
    CHECK(std::abs(back.a - m.a) + std::abs(back.b - m.b) + std::abs(back.c - m.c) + std::abs(back.d - m.d) < 1e-12);
    CHECK(reconstruction_residual(dp, eps) < 1e-12);
    const auto e = eigenvalues2(back);
    CHECK(std::abs(e.e_plus - 0.5 * (dp.t + dp.s)) < 1e-12);
    CHECK(std::abs(e.e_minus - 0.5 * (dp.t - dp.s)) < 1e-12);
  }
}

TEST_CASE("zero pseudo-norm for a complex-conjugate eigenpair") {
  const numerics::DenseMatrix h{{0.0, 1.0}, {-1.0, 0.0}};
  const numerics::DenseMatrix eta{{1.0, 0.0}, {0.0, -1.0}};
  const double r = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(pseudo_norm({Complex(r), Complex(0, r)}, eta)) < 1e-15);
  CHECK(std::abs(pseudo_norm({Complex(r), Complex(0, -r)}, eta)) < 1e-15);
  CHECK(std::abs(pseudo_norm({Complex(1.0), Complex(0.0)}, eta) - 1.0) < 1e-15);
  const auto eo = eta_orthogonality(h, eta);
  CHECK(std::abs(std::abs(eo.lambda_plus.imag()) - 1.0) < 1e-15);
}

TEST_CASE("eigenvectors of members are eta-orthogonal") {
  numerics::RngStream rng(24, 0);
  const double eps = std::exp(-1.0);
  const auto eta = build_metric(eps);
  for (int i = 0; i < 200; ++i) {
    const auto eo = eta_orthogonality(realize(random_member(rng, eps)), eta);
    REQUIRE_FALSE(eo.degenerate);
    CHECK(eo.overlap / eo.norm_product < 1e-12);
  }
  const MatrixABCD flat{0.3, 0.0, 0.0, 0.0, eps};
  CHECK(eta_orthogonality(realize(flat), eta).degenerate);
}

TEST_CASE("numeric Jacobian is proportional to s^2 sin 2theta") {
  numerics::RngStream rng(25, 0);
  std::vector<double> ratios;
  for (int i = 0; i < 20; ++i) {
    DecompParams dp{rng.standard_normal(), 0.3 + 2.0 * rng.uniform(), 0.05 + 1.4 * rng.uniform(),
                    2 * kPi * rng.uniform()};
    ratios.push_back(jacobian_numeric(dp) / (dp.s * dp.s * std::sin(2 * dp.theta)));
  }
  const auto [lo, hi] = std::minmax_element(ratios.begin(), ratios.end());
  CHECK((*hi - *lo) / *lo < 1e-6);
  // Direct determinant of (t, s, theta, phi) -> (a, b, c, d): 1/8.
  CHECK(std::abs(ratios[0] - 0.125) < 1e-7);
  CHECK_THROWS_AS(jacobian_numeric({0.0, 1.0, 0.0, 0.0}), ValidationError);
}

TEST_CASE("sampler draws have the prescribed variances") {
  const auto sh = shape_from_gamma(0.5);
  numerics::RngStream rng(26, 0);
  const int n = 200000;
  double va = 0, vb = 0, vc = 0, vd = 0;
  for (int i = 0; i < n; ++i) {
    const auto m = sample_matrix(sh, 1.0, rng);
    va += m.a * m.a;
    vb += m.b * m.b;
    vc += m.c * m.c;
    vd += m.d * m.d;
    CHECK(m.epsilon == sh.epsilon);
  }
  CHECK(std::abs(va / n - 0.5) < 0.01);
  CHECK(std::abs(vb / n - 0.5) < 0.01);
  CHECK(std::abs(vc / n - 0.3240271368319427) < 0.006);
  CHECK(std::abs(vd / n - 0.3240271368319427) < 0.006);
}

TEST_CASE("sampled spacings follow the closed-form law") {
  SamplerConfig cfg;
  cfg.shape = shape_from_gamma(1.0);
  cfg.sigma = 2.0;
  cfg.count = 100000;
  cfg.seed = 99;
  const auto sample = stats::normalize_spacings(sample_spacings(cfg));
  CHECK(rel_err(sample.raw_mean, cfg.shape.alpha * cfg.sigma) < 0.01);
  const auto ks = stats::ks_distance(sample, [&](double x) { return analytic_spacing_cdf(cfg.shape, x); });
  CHECK(ks.pass);
}

TEST_CASE("sampler output depends on seed and chunks but not threads") {
  SamplerConfig cfg;
  cfg.shape = shape_from_gamma(0.5);
  cfg.count = 5001;
  cfg.seed = 4;
  cfg.chunks = 7;
  const auto one = sample_spacings(cfg);
  cfg.threads = 3;
  CHECK(sample_spacings(cfg) == one);
  cfg.seed = 5;
  CHECK(sample_spacings(cfg) != one);
  cfg.count = 0;
  CHECK_THROWS_AS(sample_spacings(cfg), ValidationError);
}
