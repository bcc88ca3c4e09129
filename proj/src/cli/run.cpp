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

#include <CLI11.hpp>

#include <cmath>
#include <exception>
#include <map>
#include <ostream>

#include "gpue/cli/run.hpp"
#include "gpue/error.hpp"

namespace gpue::cli {

std::filesystem::path default_zeros_file() { return std::filesystem::path(GPUE_DATA_DIR) / "zeta_zeros_1e4.txt"; }

void validate(const RunConfig& c) {
  for (double g : c.gammas)
    if (!std::isfinite(g)) throw ValidationError("--gamma: values must be finite");
  if (!(c.sigma > 0.0) || !std::isfinite(c.sigma)) throw ValidationError("--sigma must be positive and finite");
  if (c.samples && *c.samples < 1) throw ValidationError("--samples must be at least 1");
  if (c.bins < 1) throw ValidationError("--bins must be at least 1");
  if (c.grid_max && !(*c.grid_max > 0.0 && std::isfinite(*c.grid_max)))
    throw ValidationError("--grid-max must be positive and finite");
  if (c.grid_points && *c.grid_points < 2) throw ValidationError("--grid-points must be at least 2");
  if (c.basis_sizes.size() < 2) throw ValidationError("--basis-sizes needs at least two sizes");
  for (std::size_t i = 0; i < c.basis_sizes.size(); ++i) {
    if (c.basis_sizes[i] < 4) throw ValidationError("--basis-sizes entries must be at least 4");
    if (i && c.basis_sizes[i] <= c.basis_sizes[i - 1])
      throw ValidationError("--basis-sizes must be strictly ascending");
  }
  if (c.k_track < 1 || c.k_track > c.basis_sizes.front())
    throw ValidationError("--k-track must lie in [1, smallest basis size]");
  if (!(c.beta > 0.0 && c.beta < 1.0)) throw ValidationError("--beta must lie in (0, 1)");
  if (c.threads < 1) throw ValidationError("--threads must be at least 1");
  if (c.chunks < 1) throw ValidationError("--chunks must be at least 1");
  if (c.quad_nodes_factor < 1) throw ValidationError("--quad-nodes-factor must be at least 1");
  if (c.emit_plot_script && c.format != OutputFormat::kCsv)
    throw ValidationError("--emit-plot-script reads CSV files; use --format csv");
  if (c.truncated_product && !(c.subcommand == Subcommand::kDiag && c.diag_kind == "hbk"))
    throw ValidationError("--truncated-product applies to 'diag hbk' only");
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  config.zeros_file = default_zeros_file();

  CLI::App app{"Pseudo-Hermitian random-matrix and xp-Hamiltonian laboratory", "gpue-lab"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  std::vector<double> gammas;
  std::size_t samples = 0;
  double grid_max = 0.0;
  std::size_t grid_points = 0;
  std::string format = "csv";
  std::string out_dir = config.out_dir.string();
  std::string zeros_file = config.zeros_file.string();

  auto* gamma_opt = app.add_option("--gamma", gammas, "Non-Hermiticity parameter(s), comma separated")->delimiter(',');
  app.add_option("--sigma", config.sigma, "Ensemble scale sigma");
  auto* samples_opt = app.add_option("--samples", samples, "Monte Carlo sample count");
  app.add_option("--seed", config.seed, "Master RNG seed");
  app.add_option("--bins", config.bins, "Histogram bins");
  auto* grid_max_opt = app.add_option("--grid-max", grid_max, "Upper end of the x grid");
  auto* grid_points_opt = app.add_option("--grid-points", grid_points, "Number of x grid points");
  app.add_option("--basis-sizes", config.basis_sizes, "Truncation ladder, comma separated")->delimiter(',');
  app.add_option("--k-track", config.k_track, "Eigenvalues tracked per size");
  app.add_option("--beta", config.beta, "Okubo mixing parameter in (0, 1)");
  app.add_option("--zeros-file", zeros_file, "Zero ordinate table");
  app.add_option("--out", out_dir, "Output directory");
  app.add_option("--format", format, "Tabular output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--threads", config.threads, "Worker threads");
  app.add_option("--chunks", config.chunks, "RNG chunks (fixes the sample stream)");
  app.add_flag("--emit-plot-script", config.emit_plot_script, "Write a matplotlib script for the CSV output");
  app.add_option("--quad-nodes-factor", config.quad_nodes_factor, "Okubo quadrature nodes per basis level");
  app.add_flag("--truncated-product", config.truncated_product, "Build xp as a product of truncated x and p");

  const std::map<std::string, Subcommand> names{
      {"shape", Subcommand::kShape},     {"pdf", Subcommand::kPdf},     {"sample", Subcommand::kSample},
      {"oracle", Subcommand::kOracle},   {"algebra", Subcommand::kAlgebra}, {"diag", Subcommand::kDiag},
      {"zeros", Subcommand::kZeros},     {"fig1", Subcommand::kFig1}};
  const std::map<std::string, std::string> help{
      {"shape", "Print the shape constants for each gamma"},
      {"pdf", "Emit the deformed, GUE and GOE spacing densities"},
      {"sample", "Monte Carlo spacings: histogram and KS test"},
      {"oracle", "Compare the numeric marginal with the closed form"},
      {"algebra", "Residual suite for the 2x2 ensemble identities"},
      {"diag", "Truncated-basis convergence ladder (hpt, hbk or okubo)"},
      {"zeros", "Zeta-zero spacing and pair-correlation statistics"},
      {"fig1", "Deformed densities against the GUE surmise"}};
  std::map<std::string, CLI::App*> subs;
  for (const auto& [name, _] : names) subs[name] = app.add_subcommand(name, help.at(name));
  subs["diag"]->add_option("kind", config.diag_kind, "Hamiltonian family")
      ->required()
      ->check(CLI::IsMember({"hpt", "hbk", "okubo"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "gpue-lab: " << e.what() << "\n";
    err << "Run with --help for usage.\n";
    return 2;
  }

  for (const auto& [name, sub] : subs)
    if (sub->parsed()) config.subcommand = names.at(name);
  if (gamma_opt->count() > 0) config.gammas = gammas;
  if (samples_opt->count() > 0) config.samples = samples;
  if (grid_max_opt->count() > 0) config.grid_max = grid_max;
  if (grid_points_opt->count() > 0) config.grid_points = grid_points;
  config.format = format == "json" ? OutputFormat::kJson : OutputFormat::kCsv;
  config.out_dir = out_dir;
  config.zeros_file = zeros_file;

  try {
    validate(config);
    execute(config, out);
  } catch (const ValidationError& e) {
    err << "gpue-lab: invalid input: " << e.what() << "\n";
    return 2;
  } catch (const NumericalError& e) {
    err << "gpue-lab: numerical failure: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "gpue-lab: internal error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}

}  // namespace gpue::cli
