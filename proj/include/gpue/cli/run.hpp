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

#ifndef GPUE_CLI_RUN_HPP_
#define GPUE_CLI_RUN_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace gpue::cli {

enum class OutputFormat { kCsv, kJson };

enum class Subcommand { kShape, kPdf, kSample, kOracle, kAlgebra, kDiag, kZeros, kFig1 };

struct RunConfig {
  Subcommand subcommand = Subcommand::kShape;
  std::string diag_kind;  // hpt, hbk or okubo
  std::vector<double> gammas;  // empty: the subcommand's default set
  double sigma = 1.0;
  std::optional<std::size_t> samples;
  std::uint64_t seed = 1;
  std::size_t bins = 60;
  std::optional<double> grid_max;
  std::optional<std::size_t> grid_points;
  std::vector<int> basis_sizes{64, 128, 256, 512};
  int k_track = 10;
  double beta = 0.5;
  std::filesystem::path zeros_file;
  std::filesystem::path out_dir = "gpue-out";
  OutputFormat format = OutputFormat::kCsv;
  unsigned threads = 1;
  std::size_t chunks = 16;
  bool emit_plot_script = false;
  int quad_nodes_factor = 8;
  bool truncated_product = false;
};

// Throws ValidationError describing the first out-of-range field.
void validate(const RunConfig& config);

// Parses argv (argv[0] is the program name), validates, dispatches. Returns
// 0 on success, 2 on usage or validation errors, 3 on numerical failure.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Executes an already validated configuration; exceptions propagate.
void execute(const RunConfig& config, std::ostream& out);

std::filesystem::path default_zeros_file();

}  // namespace gpue::cli

#endif  // GPUE_CLI_RUN_HPP_
