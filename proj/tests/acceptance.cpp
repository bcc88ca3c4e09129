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

// Acceptance checks; prints one PASS/FAIL line per criterion and exits
// non-zero if any fails. Pass criterion numbers as arguments to run a subset.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <functional>
#include <limits>
#include <numbers>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gpue/ensemble/gamma_shape.hpp"
#include "gpue/ensemble/matrix_algebra.hpp"
#include "gpue/ensemble/sampler.hpp"
#include "gpue/ensemble/spacing_density.hpp"
#include "gpue/numerics/quadrature.hpp"
#include "gpue/numerics/rng.hpp"
#include "gpue/stats/ks.hpp"
#include "gpue/stats/spacing_sample.hpp"
#include "gpue/xp/convergence.hpp"
#include "gpue/xp/eigenfunction.hpp"
#include "gpue/zeros/zero_report.hpp"

using namespace gpue;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

struct Verdict {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << "[failed: " << what << "] ";
    }
  }
};

struct Criterion {
  int id;
  const char* name;
  double time_limit;  // seconds; 0 for none
  std::function<void(Verdict&)> body;
};

void normalization(Verdict& v) {
  double worst = 0.0;
  for (double g : {0.0, 0.1, 0.5, 1.0, 2.0}) {
    const auto s = ensemble::shape_from_gamma(g);
    const double mass = numerics::quad_adaptive([&](double x) { return ensemble::analytic_spacing_pdf(s, x); }, 0.0, kInf);
    const double mean =
        numerics::quad_adaptive([&](double x) { return x * ensemble::analytic_spacing_pdf(s, x); }, 0.0, kInf);
    worst = std::max({worst, std::abs(mass - 1.0), std::abs(mean - 1.0)});
  }
  v.detail << "max |integral - 1| = " << worst << " ";
  v.require(worst <= 1e-8, "normalization and mean within 1e-8");
}

void gue_limit(Verdict& v) {
  const auto s = ensemble::shape_from_gamma(1e-6);
  const auto gue32 = [](double x) { return 32.0 / (kPi * kPi) * x * x * std::exp(-4.0 * x * x / kPi); };
  const double d = stats::sup_norm_diff([&](double x) { return ensemble::analytic_spacing_pdf(s, x); }, gue32, 5.0, 512);
  v.detail << "sup |P_1e-6 - P_GUE| = " << d << " ";
  v.require(d <= 1e-5, "sup-norm <= 1e-5");
}

void sampling(Verdict& v) {
  ensemble::SamplerConfig cfg;
  cfg.shape = ensemble::shape_from_gamma(0.5);
  cfg.sigma = 1.0;
  cfg.count = 1000000;
  cfg.seed = 2026;
  cfg.threads = 1;
  const auto sample = stats::normalize_spacings(ensemble::sample_spacings(cfg));
  const auto ks = stats::ks_distance(sample, [&](double x) { return ensemble::analytic_spacing_cdf(cfg.shape, x); });
  const double expected = cfg.shape.alpha * cfg.sigma;
  const double rel = std::abs(sample.raw_mean - expected) / expected;
  v.detail << "KS = " << ks.statistic << " (threshold " << ks.threshold << "), <s> = " << sample.raw_mean
           << " vs alpha sigma = " << expected << " ";
  v.require(ks.pass, "KS below 1.949/sqrt(n)");
  v.require(rel < 0.005, "mean spacing within 0.5%");
}

void marginal(Verdict& v) {
  std::vector<double> xs;
  for (int i = 0; i <= 39; ++i) xs.push_back(0.1 + 0.1 * i);
  double worst = 0.0;
  for (double g : {0.25, 1.0}) {
    const auto s = ensemble::shape_from_gamma(g);
    const auto curve = ensemble::normalized_marginal_oracle(s, xs);
    for (std::size_t i = 0; i < xs.size(); ++i)
      worst = std::max(worst, std::abs(curve.pdf[i] - ensemble::analytic_spacing_pdf(s, xs[i])));
  }
  const auto s1 = ensemble::shape_from_gamma(1.0);
  const double alt =
      ensemble::unnormalized_spacing_density(s1, 3.0, 1.0, ensemble::ErfiArgument::kQsOverTwoSigma) /
          ensemble::unnormalized_spacing_density(s1, 1.0, 1.0, ensemble::ErfiArgument::kQsOverTwoSigma) -
      ensemble::marginal_oracle(s1, 3.0) / ensemble::marginal_oracle(s1, 1.0);
  v.detail << "max pointwise deviation " << worst << " on 40 points; q s/(2 sigma) shape ratio error " << alt << " ";
  v.require(worst <= 1e-6, "pointwise within 1e-6");
  v.require(std::abs(alt) > 1e-3, "alternative Erfi argument rejected");
}

void proximity(Verdict& v) {
  constexpr double kFrozen = 0.012316522485592834;  // 512-point grid on [0, 5], 40-digit evaluation
  std::vector<double> d;
  for (double g : {0.0, 0.5, 1.0, 2.0}) {
    const auto s = ensemble::shape_from_gamma(g);
    d.push_back(stats::sup_norm_diff([&](double x) { return ensemble::analytic_spacing_pdf(s, x); },
                                     ensemble::gue_surmise_pdf, 5.0, 512));
  }
  v.detail << "distances " << d[0] << ", " << d[1] << ", " << d[2] << ", " << d[3] << " ";
  v.require(d[1] < 0.05, "D(0.5) below 0.05");
  v.require(std::abs(d[1] - kFrozen) < 1e-9, "D(0.5) matches the frozen constant");
  v.require(d[0] < d[1] && d[1] < d[2] && d[2] < d[3], "monotone in gamma");
}

void algebra(Verdict& v) {
  const auto shape = ensemble::shape_from_gamma(0.5);
  const auto eta = ensemble::build_metric(shape.epsilon);
  numerics::RngStream rng(2026, 0);
  double ph = 0, pu = 0, rec = 0, prod = 0, orth = 0;
  int degenerate = 0;
  for (int i = 0; i < 10000; ++i) {
    const auto m = ensemble::sample_matrix(shape, 1.0, rng);
    const auto h = ensemble::realize(m);
    ph = std::max(ph, ensemble::pseudo_hermiticity_residual(h, eta));
    const auto dp = ensemble::decompose(m);
    const auto d = ensemble::build_D(dp.theta, dp.phi, shape.epsilon);
    pu = std::max(pu, ensemble::pseudo_unitarity_residual(d, eta));
    prod = std::max(prod, std::abs(ensemble::eigenvalue_product_modulus(d) - 1.0));
    rec = std::max(rec, ensemble::reconstruction_residual(dp, shape.epsilon));
    const auto eo = ensemble::eta_orthogonality(h, eta);
    if (eo.degenerate)
      ++degenerate;
    else
      orth = std::max(orth, eo.overlap / eo.norm_product);
  }
  const numerics::DenseMatrix pair{{0.0, 1.0}, {-1.0, 0.0}};
  const numerics::DenseMatrix indefinite{{1.0, 0.0}, {0.0, -1.0}};
  const auto e = numerics::eigenvalues2(pair);
  double pn = 0.0;
  for (const auto& lambda : {e.first, e.second}) {
    const auto vec = numerics::eigenvector2(pair, lambda);
    const double n = numerics::norm2(vec);
    pn = std::max(pn, std::abs(ensemble::pseudo_norm({vec[0] / n, vec[1] / n}, indefinite)));
  }
  v.detail << "pseudo-Hermiticity " << ph << ", pseudo-unitarity " << pu << ", |l1 l2| - 1 " << prod
           << ", reconstruction " << rec << ", eta-overlap " << orth << " (" << degenerate
           << " degenerate), complex-pair pseudo-norm " << pn << " ";
  v.require(ph <= 1e-12, "pseudo-Hermiticity 1e-12");
  v.require(pu <= 1e-13, "pseudo-unitarity 1e-13");
  v.require(prod <= 1e-12, "unit eigenvalue product 1e-12");
  v.require(rec <= 1e-12, "reconstruction 1e-12");
  v.require(orth <= 1e-12, "eta-orthogonality 1e-12");
  v.require(pn <= 1e-13, "zero pseudo-norm 1e-13");
}

void jacobian(Verdict& v) {
  numerics::RngStream rng(2026, 1);
  std::vector<double> r;
  for (int i = 0; i < 20; ++i) {
    ensemble::DecompParams dp{rng.standard_normal(), 0.2 + 3.0 * rng.uniform(), 0.02 + (kPi / 2 - 0.04) * rng.uniform(),
                              2 * kPi * rng.uniform()};
    r.push_back(ensemble::jacobian_numeric(dp) / (dp.s * dp.s * std::sin(2 * dp.theta)));
  }
  const auto [lo, hi] = std::minmax_element(r.begin(), r.end());
  const double spread = (*hi - *lo) / std::abs(*lo);
  v.detail << "ratio " << r[0] << ", relative spread " << spread << " over 20 points ";
  v.require(spread <= 1e-6, "constant within 1e-6");
}

void hpt_real_part(Verdict& v) {
  double worst = 0.0;
  for (int n : {16, 64, 256, 512})
    for (const auto& z : xp::hpt_spectrum(xp::build_hpt(n))) worst = std::max(worst, std::abs(z.real() - 0.5));
  v.detail << "max |Re - 1/2| = " << worst << " ";
  v.require(worst <= 1e-12, "Re = 1/2 within 1e-12");
}

void non_convergence(Verdict& v) {
  const std::vector<int> sizes{64, 128, 256, 512};
  const auto hbk =
      xp::convergence_ladder([](int n) { return xp::hbk_ladder_spectrum(n); }, sizes, 10, xp::TrackBy::kSmallestAbs);
  xp::OkuboOptions base;
  xp::OkuboOptions doubled;
  doubled.nodes_per_level = 2 * base.nodes_per_level;
  const auto ok1 = xp::convergence_ladder([&](int n) { return xp::okubo_ladder_spectrum(n, base); }, sizes, 10,
                                          xp::TrackBy::kSmallestAbs);
  const auto ok2 = xp::convergence_ladder([&](int n) { return xp::okubo_ladder_spectrum(n, doubled); }, sizes, 10,
                                          xp::TrackBy::kSmallestAbs);
  const auto control = xp::convergence_ladder(xp::diagonal_control_spectrum, sizes, 10, xp::TrackBy::kSmallestAbs);
  v.detail << "H_BK last drift " << hbk.drift.back() << ", Okubo last drift " << ok1.drift.back() << " / "
           << ok2.drift.back() << " (doubled nodes), control " << control.drift.back() << " ";
  v.require(!hbk.converged, "H_BK not converged");
  v.require(!ok1.converged && !ok2.converged, "Okubo not converged at both node counts");
  v.require(control.converged, "diagonal control converged");
}

void eigenfunction(Verdict& v) {
  xp::HalfLineGrid grid;  // [0.5, 2], h = 1e-4
  xp::HalfLineGrid half = grid;
  half.n_points = 2 * (grid.n_points - 1) + 1;
  const double t = 14.134725;
  const double r = xp::hpt_eigenfunction_residual(t, grid);
  const double r_half = xp::hpt_eigenfunction_residual(t, half);
  const double order = std::log2(r / r_half);
  v.detail << "residual " << r << " at h = " << grid.step() << ", observed order " << order << " ";
  v.require(r <= 1e-6, "residual <= 1e-6 at h = 1e-4");
  v.require(std::abs(order - 2.0) <= 0.1, "order 2.0 +- 0.1");
}

void riemann_zeros(Verdict& v) {
  const auto table = zeros::parse_zero_file(std::filesystem::path(GPUE_DATA_DIR) / "zeta_zeros_1e4.txt");
  const auto rep = zeros::zero_spacing_report(table, {ensemble::shape_from_gamma(0.0)});
  v.detail << rep.n_zeros << " zeros, KS GUE " << rep.ks_gue.statistic << ", KS GOE " << rep.ks_goe.statistic
           << ", pair-correlation msd " << rep.two_point_msd << " vs Poisson " << rep.poisson_msd << " ";
  v.require(rep.n_zeros >= 10000, "10^4 zeros");
  v.require(rep.ks_gue.statistic < 0.03, "KS vs GUE below 0.03");
  v.require(rep.ks_gue.statistic < rep.ks_goe.statistic, "GUE closer than GOE");
  v.require(rep.two_point_msd < rep.poisson_msd, "pair correlation beats Poisson");
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {1, "normalization and unit mean of the deformed spacing law", 1.0, normalization},
      {2, "GUE limit at gamma = 1e-6", 1.0, gue_limit},
      {3, "Monte Carlo spacings vs closed-form CDF", 30.0, sampling},
      {4, "marginalization oracle vs closed form", 60.0, marginal},
      {5, "proximity to GUE and monotone deformation", 0.0, proximity},
      {6, "pseudo-Hermitian algebra identities", 5.0, algebra},
      {7, "Jacobian proportionality", 0.0, jacobian},
      {8, "H_PT real part one half", 0.0, hpt_real_part},
      {9, "truncated-basis non-convergence", 120.0, non_convergence},
      {10, "power-law eigenfunction residual", 0.0, eigenfunction},
      {11, "Riemann-zero spacing statistics", 10.0, riemann_zeros},
  };
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));

  int failures = 0;
  for (const auto& c : criteria) {
    if (!selected.empty() && !selected.count(c.id)) continue;
    Verdict v;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(v);
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail << "[exception: " << e.what() << "] ";
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit > 0.0) v.require(seconds < c.time_limit, "runtime limit " + std::to_string(c.time_limit) + " s");
    if (!v.pass) ++failures;
    std::printf("%s criterion %2d: %s | %s(%.2f s)\n", v.pass ? "PASS" : "FAIL", c.id, c.name, v.detail.str().c_str(),
                seconds);
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
