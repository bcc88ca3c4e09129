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

#ifndef GPUE_CLI_PLOT_SCRIPT_HPP_
#define GPUE_CLI_PLOT_SCRIPT_HPP_

#include <filesystem>
#include <string>
#include <vector>

namespace gpue::cli {

// One panel: y columns of a CSV against its x column. When group_column is
// set, each distinct value of that column becomes its own curve.
struct PlotPanel {
  std::string csv_file;
  std::string x_column;
  std::vector<std::string> y_columns;
  std::string group_column;
  std::string title;
  std::string x_label;
  std::string y_label;
  bool step = false;
};

// Writes plot_<name>.py into dir. The script reads only the listed CSV files
// and saves <name>.png next to them.
std::filesystem::path write_plot_script(const std::filesystem::path& dir, const std::string& name,
                                        const std::vector<PlotPanel>& panels);

}  // namespace gpue::cli

#endif  // GPUE_CLI_PLOT_SCRIPT_HPP_
