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

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>

#include "gpue/cli/run.hpp"
#include "gpue/ensemble/gamma_shape.hpp"
#include "gpue/ensemble/matrix_algebra.hpp"
#include "gpue/ensemble/sampler.hpp"
#include "gpue/ensemble/spacing_density.hpp"
#include "gpue/error.hpp"
#include "gpue/io/format.hpp"
#include "gpue/numerics/rng.hpp"
#include "gpue/stats/histogram.hpp"
#include "gpue/stats/ks.hpp"
#include "gpue/stats/spacing_sample.hpp"
#include "gpue/xp/convergence.hpp"
#include "gpue/zeros/zero_report.hpp"
#include "plot_script.hpp"

namespace gpue::cli {

namespace {

using Json = nlohmann::ordered_json;
using ensemble::GammaShape;
using io::format_double;

class OutputDir {
 public:
  explicit OutputDir(const RunConfig& config) : config_(config) {
    std::error_code ec;
    std::filesystem::create_directories(config.out_dir, ec);
    if (ec) throw ValidationError("cannot create output directory '" + config.out_dir.string() + "': " + ec.message());
  }

  std::filesystem::path path(const std::string& file) const { return config_.out_dir / file; }

  std::ofstream open(const std::string& file) const {
    std::ofstream out(path(file), std::ios::binary);
    if (!out) throw ValidationError("cannot write '" + path(file).string() + "'");
    return out;
  }

  void json(const std::string& file, const Json& value) const { open(file) << value.dump(2) << "\n"; }

  // Writes stem.csv or stem.json according to --format; returns the file name.
  std::string table(const std::string& stem, const std::vector<io::CsvColumn>& columns) const {
    if (config_.format == OutputFormat::kCsv) {
      auto out = open(stem + ".csv");
      io::write_csv(out, columns);
      return stem + ".csv";
    }
    Json doc;
    doc["schema"] = "gpue-lab v1";
    Json cols = Json::object();
    for (const auto& c : columns) cols[c.name] = c.values;
    doc["columns"] = cols;
    json(stem + ".json", doc);
    return stem + ".json";
  }

  void plot(const std::string& name, const std::vector<PlotPanel>& panels, std::ostream& log) const {
    if (!config_.emit_plot_script) return;
    log << "plot script: " << write_plot_script(config_.out_dir, name, panels).string() << "\n";
  }

 private:
  const RunConfig& config_;
};

std::vector<double> gammas_or(const RunConfig& c, std::vector<double> fallback) {
  return c.gammas.empty() ? fallback : c.gammas;
}

std::vector<double> uniform_grid(double lo, double hi, std::size_t n) {
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  return x;
}

std::string gamma_column(double g) { return "p_gamma_" + format_double(g); }

Json shape_json(const GammaShape& s) {
  return Json{{"gamma", s.gamma}, {"epsilon", s.epsilon}, {"cosh2g", s.cosh2g},
              {"p", s.p},         {"q", s.q},             {"alpha", s.alpha}};
}

Json ks_json(const stats::KsReport& ks) {
  return Json{{"statistic", ks.statistic}, {"n", ks.n}, {"threshold", ks.threshold}, {"pass", ks.pass}};
}

Json complex_list(const std::vector<numerics::Complex>& v) {
  Json arr = Json::array();
  for (const auto& z : v) arr.push_back(Json{{"re", z.real()}, {"im", z.imag()}});
  return arr;
}

void cmd_shape(const RunConfig& c, std::ostream& out) {
  OutputDir dir(c);
  Json arr = Json::array();
  for (double g : gammas_or(c, {0.0, 0.5, 1.0, 2.0})) {
    const auto s = ensemble::shape_from_gamma(g);
    arr.push_back(shape_json(s));
    out << "gamma " << format_double(g) << ": epsilon " << format_double(s.epsilon) << ", cosh 2gamma "
        << format_double(s.cosh2g) << ", p " << format_double(s.p) << ", q " << format_double(s.q) << ", alpha "
        << format_double(s.alpha) << "\n";
  }
  dir.json("shape.json", arr);
  out << "wrote " << dir.path("shape.json").string() << "\n";
}

void cmd_pdf(const RunConfig& c, std::ostream& out) {
  OutputDir dir(c);
  const auto gammas = gammas_or(c, {0.0, 0.5, 1.0, 2.0});
  const auto x = uniform_grid(0.0, c.grid_max.value_or(4.0), c.grid_points.value_or(401));
  std::vector<io::CsvColumn> cols{{"x", x}, {"gue", {}}, {"goe", {}}};
  for (double xi : x) {
    cols[1].values.push_back(ensemble::gue_surmise_pdf(xi));
    cols[2].values.push_back(ensemble::goe_surmise_pdf(xi));
  }
  std::vector<std::string> ys{"gue", "goe"};
  for (double g : gammas) {
    const auto s = ensemble::shape_from_gamma(g);
    io::CsvColumn col{gamma_column(g), {}};
    for (double xi : x) col.values.push_back(ensemble::analytic_spacing_pdf(s, xi));
    ys.push_back(col.name);
    cols.push_back(std::move(col));
  }
  const auto file = dir.table("pdf", cols);
  out << "spacing densities for " << gammas.size() << " gamma value(s) on " << x.size() << " points in [0, "
      << format_double(x.back()) << "]\nwrote " << dir.path(file).string() << "\n";
  dir.plot("pdf", {{file, "x", ys, "", "Spacing densities", "x", "P(x)"}}, out);
}

void cmd_sample(const RunConfig& c, std::ostream& out) {
  OutputDir dir(c);
  const std::size_t n = c.samples.value_or(100000);
  const double hist_max = c.grid_max.value_or(stats::kDefaultHistogramMax);
  std::vector<io::CsvColumn> cols{{"gamma", {}}, {"bin_lo", {}}, {"bin_hi", {}},
                                  {"center", {}}, {"density", {}}, {"analytic", {}}};
  Json summary = Json::array();
  for (double g : gammas_or(c, {0.5})) {
    ensemble::SamplerConfig sc;
    sc.sigma = c.sigma;
    sc.shape = ensemble::shape_from_gamma(g);
    sc.count = n;
    sc.seed = c.seed;
    sc.chunks = c.chunks;
    sc.threads = c.threads;
    const auto sample = stats::normalize_spacings(ensemble::sample_spacings(sc));
    const auto ks =
        stats::ks_distance(sample, [&](double x) { return ensemble::analytic_spacing_cdf(sc.shape, x); });
    const auto hist = stats::make_histogram(sample.values, 0.0, hist_max, c.bins);
    for (std::size_t i = 0; i < hist.bins(); ++i) {
      cols[0].values.push_back(g);
      cols[1].values.push_back(hist.bin_lo(i));
      cols[2].values.push_back(hist.bin_hi(i));
      cols[3].values.push_back(hist.bin_center(i));
      cols[4].values.push_back(hist.density[i]);
      cols[5].values.push_back(ensemble::analytic_spacing_pdf(sc.shape, hist.bin_center(i)));
    }
    const double expected_mean = sc.shape.alpha * c.sigma;
    summary.push_back(Json{{"gamma", g},
                           {"sigma", c.sigma},
                           {"n_samples", n},
                           {"seed", c.seed},
                           {"chunks", c.chunks},
                           {"mean_spacing", sample.raw_mean},
                           {"alpha_gamma", sc.shape.alpha},
                           {"mean_relative_error", std::abs(sample.raw_mean - expected_mean) / expected_mean},
                           {"ks_statistic", ks.statistic},
                           {"ks_threshold", ks.threshold},
                           {"pass", ks.pass},
                           {"underflow", hist.underflow},
                           {"overflow", hist.overflow}});
    out << "gamma " << format_double(g) << ": " << n << " spacings, <s> = " << format_double(sample.raw_mean)
        << " (alpha sigma = " << format_double(expected_mean) << "), KS " << format_double(ks.statistic)
        << (ks.pass ? " < " : " >= ") << format_double(ks.threshold) << (ks.pass ? " pass" : " FAIL") << "\n";
  }
  const auto file = dir.table("sample_hist", cols);
  dir.json("sample_summary.json", summary);
  out << "wrote " << dir.path(file).string() << ", " << dir.path("sample_summary.json").string() << "\n";
  dir.plot("sample", {{file, "center", {"density", "analytic"}, "gamma", "Sampled spacings", "x", "density", true}},
           out);
}

void cmd_oracle(const RunConfig& c, std::ostream& out) {
  constexpr double kTolerance = 1e-6;
  OutputDir dir(c);
  const auto x = uniform_grid(0.1, c.grid_max.value_or(4.0), c.grid_points.value_or(40));
  std::vector<io::CsvColumn> cols{{"gamma", {}}, {"x", {}}, {"oracle", {}}, {"analytic", {}}, {"abs_diff", {}}};
  Json summary = Json::array();
  for (double g : gammas_or(c, {0.25, 1.0})) {
    const auto s = ensemble::shape_from_gamma(g);
    const auto curve = ensemble::normalized_marginal_oracle(s, x, c.sigma);
    double worst = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double analytic = ensemble::analytic_spacing_pdf(s, x[i]);
      const double diff = std::abs(curve.pdf[i] - analytic);
      worst = std::max(worst, diff);
      cols[0].values.push_back(g);
      cols[1].values.push_back(x[i]);
      cols[2].values.push_back(curve.pdf[i]);
      cols[3].values.push_back(analytic);
      cols[4].values.push_back(diff);
    }
    summary.push_back(Json{{"gamma", g},
                           {"sigma", c.sigma},
                           {"norm", curve.norm},
                           {"mean_spacing", curve.mean_spacing},
                           {"alpha_sigma", s.alpha * c.sigma},
                           {"max_abs_diff", worst},
                           {"tolerance", kTolerance},
                           {"pass", worst <= kTolerance}});
    out << "gamma " << format_double(g) << ": max |oracle - closed form| = " << format_double(worst) << " over "
        << x.size() << " points" << (worst <= kTolerance ? " pass" : " FAIL") << "\n";
  }
  const auto file = dir.table("oracle", cols);
  dir.json("oracle_summary.json", summary);
  out << "wrote " << dir.path(file).string() << ", " << dir.path("oracle_summary.json").string() << "\n";
  dir.plot("oracle", {{file, "x", {"oracle", "analytic"}, "gamma", "Marginal vs closed form", "x", "P(x)"}}, out);
}

struct AlgebraTolerances {
  double pseudo_hermiticity = 1e-12;
  double pseudo_unitarity = 1e-13;
  double reconstruction = 1e-12;
  double unit_product = 1e-12;
  double eta_orthogonality = 1e-12;
  double jacobian_spread = 1e-6;
  double pseudo_norm = 1e-13;
};

Json algebra_for_gamma(const GammaShape& shape, const RunConfig& c, std::size_t members) {
  const AlgebraTolerances tol;
  numerics::RngStream rng(c.seed, 0);
  const auto eta = ensemble::build_metric(shape.epsilon);
  double ph = 0.0, pu = 0.0, rec = 0.0, prod = 0.0, orth = 0.0;
  std::size_t degenerate = 0;
  for (std::size_t i = 0; i < members; ++i) {
    const auto m = ensemble::sample_matrix(shape, c.sigma, rng);
    const auto h = ensemble::realize(m);
    ph = std::max(ph, ensemble::pseudo_hermiticity_residual(h, eta));
    const auto dp = ensemble::decompose(m);
    const auto d = ensemble::build_D(dp.theta, dp.phi, shape.epsilon);
    pu = std::max(pu, ensemble::pseudo_unitarity_residual(d, eta));
    prod = std::max(prod, std::abs(ensemble::eigenvalue_product_modulus(d) - 1.0));
    rec = std::max(rec, ensemble::reconstruction_residual(dp, shape.epsilon));
    const auto eo = ensemble::eta_orthogonality(h, eta);
    if (eo.degenerate) {
      ++degenerate;
    } else {
      orth = std::max(orth, eo.overlap / eo.norm_product);
    }
  }

  std::vector<double> ratios;
  for (int i = 0; i < 20; ++i) {
    ensemble::DecompParams dp;
    dp.t = numerics::gaussian_draw(rng, 0.0, 1.0);
    dp.s = 0.2 + 2.8 * rng.uniform();
    dp.theta = 0.05 + (0.5 * std::numbers::pi - 0.1) * rng.uniform();
    dp.phi = 2.0 * std::numbers::pi * rng.uniform();
    ratios.push_back(ensemble::jacobian_numeric(dp) / (dp.s * dp.s * std::sin(2.0 * dp.theta)));
  }
  const auto [lo, hi] = std::minmax_element(ratios.begin(), ratios.end());
  double mean_ratio = 0.0;
  for (double r : ratios) mean_ratio += r / static_cast<double>(ratios.size());
  const double spread = (*hi - *lo) / std::abs(mean_ratio);

  return Json{{"gamma", shape.gamma},
              {"members", members},
              {"degenerate_members", degenerate},
              {"pseudo_hermiticity", {{"max", ph}, {"tolerance", tol.pseudo_hermiticity}, {"pass", ph <= tol.pseudo_hermiticity}}},
              {"pseudo_unitarity", {{"max", pu}, {"tolerance", tol.pseudo_unitarity}, {"pass", pu <= tol.pseudo_unitarity}}},
              {"eigenvalue_product", {{"max_abs_dev", prod}, {"tolerance", tol.unit_product}, {"pass", prod <= tol.unit_product}}},
              {"reconstruction", {{"max", rec}, {"tolerance", tol.reconstruction}, {"pass", rec <= tol.reconstruction}}},
              {"eta_orthogonality", {{"max_relative_overlap", orth}, {"tolerance", tol.eta_orthogonality}, {"pass", orth <= tol.eta_orthogonality}}},
              {"jacobian", {{"points", ratios.size()}, {"mean_ratio", mean_ratio}, {"relative_spread", spread},
                            {"tolerance", tol.jacobian_spread}, {"pass", spread <= tol.jacobian_spread}}}};
}

Json complex_pair_example() {
  const numerics::DenseMatrix h{{0.0, 1.0}, {-1.0, 0.0}};
  const numerics::DenseMatrix eta{{1.0, 0.0}, {0.0, -1.0}};
  const auto e = numerics::eigenvalues2(h);
  double worst = 0.0;
  Json vectors = Json::array();
  for (const auto& lambda : {e.first, e.second}) {
    auto v = numerics::eigenvector2(h, lambda);
    const double n = numerics::norm2(v);
    const ensemble::StateVector2 sv{v[0] / n, v[1] / n};
    const double pn = ensemble::pseudo_norm(sv, eta);
    worst = std::max(worst, std::abs(pn));
    vectors.push_back(Json{{"eigenvalue", {{"re", lambda.real()}, {"im", lambda.imag()}}}, {"pseudo_norm", pn}});
  }
  return Json{{"eigenvectors", vectors}, {"max_abs_pseudo_norm", worst}, {"tolerance", AlgebraTolerances{}.pseudo_norm},
              {"pass", worst <= AlgebraTolerances{}.pseudo_norm}};
}

void cmd_algebra(const RunConfig& c, std::ostream& out) {
  OutputDir dir(c);
  const std::size_t members = c.samples.value_or(10000);
  Json doc;
  doc["sigma"] = c.sigma;
  doc["seed"] = c.seed;
  Json per_gamma = Json::array();
  bool all_pass = true;
  for (double g : gammas_or(c, {0.5})) {
    auto entry = algebra_for_gamma(ensemble::shape_from_gamma(g), c, members);
    out << "gamma " << format_double(g) << " (" << members << " members):\n";
    const std::pair<const char*, const char*> rows[] = {
        {"pseudo_hermiticity", "max"},     {"pseudo_unitarity", "max"},
        {"eigenvalue_product", "max_abs_dev"}, {"reconstruction", "max"},
        {"eta_orthogonality", "max_relative_overlap"}, {"jacobian", "relative_spread"}};
    for (const auto& [key, field] : rows) {
      const bool pass = entry[key]["pass"].get<bool>();
      all_pass = all_pass && pass;
      out << "  " << key << ": " << format_double(entry[key][field].get<double>()) << (pass ? " pass" : " FAIL")
          << "\n";
    }
    per_gamma.push_back(std::move(entry));
  }
  doc["ensemble"] = per_gamma;
  doc["complex_pair_example"] = complex_pair_example();
  all_pass = all_pass && doc["complex_pair_example"]["pass"].get<bool>();
  doc["pass"] = all_pass;
  out << "complex-pair pseudo-norm: "
      << format_double(doc["complex_pair_example"]["max_abs_pseudo_norm"].get<double>()) << "\n";
  dir.json("algebra.json", doc);
  out << (all_pass ? "all identities hold" : "some identities FAIL") << "\nwrote "
      << dir.path("algebra.json").string() << "\n";
}

void cmd_diag(const RunConfig& c, std::ostream& out) {
  OutputDir dir(c);
  xp::SpectrumBuilder builder;
  xp::TrackBy track = xp::TrackBy::kSmallestAbs;
  Json extra;
  if (c.diag_kind == "hpt") {
    builder = [](int n) { return xp::hpt_ladder_spectrum(n); };
    track = xp::TrackBy::kSmallestAbsImag;
  } else if (c.diag_kind == "hbk") {
    const auto form = c.truncated_product ? xp::ProductForm::kTruncatedProduct : xp::ProductForm::kNormalOrdered;
    builder = [form](int n) { return xp::hbk_ladder_spectrum(n, form); };
    extra["product_form"] = c.truncated_product ? "truncated_product" : "normal_ordered";
  } else {
    xp::OkuboOptions opts;
    opts.beta = c.beta;
    opts.nodes_per_level = c.quad_nodes_factor;
    builder = [opts](int n) { return xp::okubo_ladder_spectrum(n, opts); };
    extra["beta"] = c.beta;
    extra["quad_nodes_factor"] = c.quad_nodes_factor;
    Json sides = Json::array();
    for (int n : c.basis_sizes) sides.push_back(xp::okubo_side_for_size(n));
    extra["side_per_size"] = sides;
  }
  const auto report = xp::convergence_ladder(builder, c.basis_sizes, c.k_track, track);

  Json doc{{"kind", c.diag_kind}, {"sizes", report.sizes}, {"k", c.k_track}};
  for (auto it = extra.begin(); it != extra.end(); ++it) doc[it.key()] = it.value();
  doc["drift"] = report.drift;
  doc["spectral_scale"] = report.spectral_scale;
  doc["tolerance"] = report.tolerance;
  doc["converged"] = report.converged;
  if (c.diag_kind == "hpt") {
    double worst = 0.0;
    for (const auto& row : report.tracked)
      for (const auto& z : row) worst = std::max(worst, std::abs(z.real() - 0.5));
    doc["max_abs_re_minus_half"] = worst;
  }
  Json tracked = Json::array();
  for (const auto& row : report.tracked) tracked.push_back(complex_list(row));
  doc["tracked"] = tracked;

  std::vector<io::CsvColumn> cols{{"size", {}}, {"index", {}}, {"re", {}}, {"im", {}}};
  for (std::size_t j = 0; j < report.sizes.size(); ++j)
    for (std::size_t i = 0; i < report.tracked[j].size(); ++i) {
      cols[0].values.push_back(report.sizes[j]);
      cols[1].values.push_back(static_cast<double>(i));
      cols[2].values.push_back(report.tracked[j][i].real());
      cols[3].values.push_back(report.tracked[j][i].imag());
    }
  const std::string stem = "diag_" + c.diag_kind;
  const auto file = dir.table(stem + "_tracked", cols);
  dir.json(stem + ".json", doc);

  out << c.diag_kind << " ladder";
  for (int n : report.sizes) out << " " << n;
  out << ", k = " << c.k_track << "\n  drift:";
  for (double d : report.drift) out << " " << format_double(d);
  out << "\n  converged: " << (report.converged ? "true" : "false") << " (tolerance "
      << format_double(report.tolerance * report.spectral_scale) << ")\n";
  out << "wrote " << dir.path(stem + ".json").string() << ", " << dir.path(file).string() << "\n";
  dir.plot(stem, {{file, "re", {"im"}, "size", "Tracked eigenvalues", "Re", "Im"}}, out);
}

void cmd_zeros(const RunConfig& c, std::ostream& out) {
  OutputDir dir(c);
  const auto table = zeros::parse_zero_file(c.zeros_file);
  std::vector<GammaShape> shapes;
  for (double g : gammas_or(c, {0.0, 0.5, 1.0})) shapes.push_back(ensemble::shape_from_gamma(g));
  zeros::ZeroReportOptions opts;
  opts.bins = c.bins;
  opts.histogram_max = c.grid_max.value_or(stats::kDefaultHistogramMax);
  const auto report = zeros::zero_spacing_report(table, shapes, opts);

  Json doc{{"source", report.source_label},
           {"n_zeros", report.n_zeros},
           {"unfolded_mean_gap", report.unfolded_mean_gap},
           {"ks_gue", ks_json(report.ks_gue)},
           {"ks_goe", ks_json(report.ks_goe)}};
  Json by_shape = Json::array();
  for (const auto& sk : report.ks_shapes) {
    auto entry = ks_json(sk.ks);
    entry["gamma"] = sk.shape.gamma;
    by_shape.push_back(entry);
  }
  doc["ks_gamma"] = by_shape;
  doc["gue_closer_than_goe"] = report.ks_gue.statistic < report.ks_goe.statistic;
  doc["two_point_msd"] = report.two_point_msd;
  doc["poisson_msd"] = report.poisson_msd;
  doc["two_point_closer_than_poisson"] = report.two_point_msd < report.poisson_msd;

  const auto& h = report.histogram;
  std::vector<io::CsvColumn> hist{{"bin_lo", {}}, {"bin_hi", {}}, {"center", {}}, {"density", {}}, {"gue", {}}, {"goe", {}}};
  for (std::size_t i = 0; i < h.bins(); ++i) {
    hist[0].values.push_back(h.bin_lo(i));
    hist[1].values.push_back(h.bin_hi(i));
    hist[2].values.push_back(h.bin_center(i));
    hist[3].values.push_back(h.density[i]);
    hist[4].values.push_back(ensemble::gue_surmise_pdf(h.bin_center(i)));
    hist[5].values.push_back(ensemble::goe_surmise_pdf(h.bin_center(i)));
  }
  const auto& tp = report.two_point;
  const auto hist_file = dir.table("zeros_hist", hist);
  const auto tp_file = dir.table("zeros_two_point", {{"lag", tp.lags}, {"r2", tp.r2}, {"reference", tp.reference}});
  dir.json("zeros_summary.json", doc);

  out << report.n_zeros << " zeros from " << report.source_label << ", unfolded mean gap "
      << format_double(report.unfolded_mean_gap) << "\n";
  out << "  KS vs GUE " << format_double(report.ks_gue.statistic) << ", vs GOE "
      << format_double(report.ks_goe.statistic) << "\n";
  for (const auto& sk : report.ks_shapes)
    out << "  KS vs P_gamma(" << format_double(sk.shape.gamma) << ") " << format_double(sk.ks.statistic) << "\n";
  out << "  pair correlation msd " << format_double(report.two_point_msd) << " (Poisson "
      << format_double(report.poisson_msd) << ")\n";
  out << "wrote " << dir.path("zeros_summary.json").string() << ", " << dir.path(hist_file).string() << ", "
      << dir.path(tp_file).string() << "\n";
  dir.plot("zeros",
           {{hist_file, "center", {"density", "gue", "goe"}, "", "Unfolded zero spacings", "x", "density"},
            {tp_file, "lag", {"r2", "reference"}, "", "Pair correlation", "r", "R2(r)"}},
           out);
}

void cmd_fig1(const RunConfig& c, std::ostream& out) {
  OutputDir dir(c);
  auto gammas = gammas_or(c, {0.5, 1.0, 2.0});
  const auto x = uniform_grid(0.0, c.grid_max.value_or(5.0), c.grid_points.value_or(512));
  std::vector<io::CsvColumn> cols{{"x", x}, {"gue", {}}};
  for (double xi : x) cols[1].values.push_back(ensemble::gue_surmise_pdf(xi));
  std::vector<std::string> ys{"gue"};
  Json distances = Json::array();
  std::vector<std::pair<double, double>> by_gamma;
  for (double g : gammas) {
    const auto s = ensemble::shape_from_gamma(g);
    io::CsvColumn col{gamma_column(g), {}};
    for (double xi : x) col.values.push_back(ensemble::analytic_spacing_pdf(s, xi));
    const double d =
        stats::sup_norm_diff([&](double xi) { return ensemble::analytic_spacing_pdf(s, xi); }, ensemble::gue_surmise_pdf,
                             x.back(), x.size());
    distances.push_back(Json{{"gamma", g}, {"sup_norm_vs_gue", d}});
    by_gamma.emplace_back(std::abs(g), d);
    ys.push_back(col.name);
    cols.push_back(std::move(col));
    out << "gamma " << format_double(g) << ": sup |P_gamma - P_GUE| = " << format_double(d) << "\n";
  }
  std::sort(by_gamma.begin(), by_gamma.end());
  bool monotone = true;
  for (std::size_t i = 1; i < by_gamma.size(); ++i) monotone = monotone && by_gamma[i].second >= by_gamma[i - 1].second;
  const auto file = dir.table("fig1", cols);
  dir.json("fig1_summary.json", Json{{"grid_max", x.back()}, {"grid_points", x.size()}, {"distances", distances},
                                     {"monotone_in_abs_gamma", monotone}});
  out << "distance " << (monotone ? "grows" : "does not grow") << " monotonically with |gamma|\nwrote "
      << dir.path(file).string() << ", " << dir.path("fig1_summary.json").string() << "\n";
  dir.plot("fig1", {{file, "x", ys, "", "Deformed spacing laws", "x", "P(x)"}}, out);
}

}  // namespace

void execute(const RunConfig& config, std::ostream& out) {
  switch (config.subcommand) {
    case Subcommand::kShape: return cmd_shape(config, out);
    case Subcommand::kPdf: return cmd_pdf(config, out);
    case Subcommand::kSample: return cmd_sample(config, out);
    case Subcommand::kOracle: return cmd_oracle(config, out);
    case Subcommand::kAlgebra: return cmd_algebra(config, out);
    case Subcommand::kDiag: return cmd_diag(config, out);
    case Subcommand::kZeros: return cmd_zeros(config, out);
    case Subcommand::kFig1: return cmd_fig1(config, out);
  }
  throw ValidationError("unknown subcommand");
}

}  // namespace gpue::cli
