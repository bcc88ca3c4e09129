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

#include "plot_script.hpp"

#include <fstream>
#include <sstream>

#include "gpue/error.hpp"

namespace gpue::cli {

namespace {

std::string py_string(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\\' || c == '\'') out += '\\';
    out += c;
  }
  return out + "'";
}

std::string py_list(const std::vector<std::string>& items) {
  std::string out = "[";
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? ", " : "") + py_string(items[i]);
  return out + "]";
}

constexpr const char* kPrelude = R"(#!/usr/bin/env python3
# Generated by gpue-lab. Reads the CSV files in this directory; no recomputation.
import csv
import pathlib

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

HERE = pathlib.Path(__file__).resolve().parent


def load(name):
    with open(HERE / name, newline="") as f:
        rows = [r for r in csv.reader(f) if r and not r[0].startswith("#")]
    header, body = rows[0], rows[1:]
    return {h: [float(r[i]) for r in body] for i, h in enumerate(header)}


def draw(ax, table, x, ys, group, step):
    plot = ax.step if step else ax.plot
    keys = sorted(set(table[group])) if group else [None]
    for key in keys:
        idx = [i for i in range(len(table[x])) if key is None or table[group][i] == key]
        for y in ys:
            label = y if key is None else "%s %s=%g" % (y, group, key)
            plot([table[x][i] for i in idx], [table[y][i] for i in idx], label=label)
    ax.legend(fontsize="small")


)";

}  // namespace

std::filesystem::path write_plot_script(const std::filesystem::path& dir, const std::string& name,
                                        const std::vector<PlotPanel>& panels) {
  std::ostringstream py;
  py << kPrelude;
  py << "fig, axes = plt.subplots(1, " << panels.size() << ", figsize=(" << 5 * panels.size()
     << ", 4), squeeze=False)\n";
  for (std::size_t i = 0; i < panels.size(); ++i) {
    const auto& p = panels[i];
    py << "ax = axes[0][" << i << "]\n";
    py << "draw(ax, load(" << py_string(p.csv_file) << "), " << py_string(p.x_column) << ", " << py_list(p.y_columns)
       << ", " << (p.group_column.empty() ? "None" : py_string(p.group_column)) << ", "
       << (p.step ? "True" : "False") << ")\n";
    py << "ax.set_title(" << py_string(p.title) << ")\n";
    py << "ax.set_xlabel(" << py_string(p.x_label) << ")\n";
    py << "ax.set_ylabel(" << py_string(p.y_label) << ")\n";
  }
  py << "fig.tight_layout()\n";
  py << "fig.savefig(HERE / " << py_string(name + ".png") << ", dpi=120)\n";

  const auto path = dir / ("plot_" + name + ".py");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write '" + path.string() + "'");
  out << py.str();
  return path;
}

}  // namespace gpue::cli
