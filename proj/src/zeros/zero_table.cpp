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

#include "gpue/zeros/zero_table.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>

#include "gpue/io/format.hpp"

namespace gpue::zeros {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

}  // namespace

ZeroFileError::ZeroFileError(const std::string& source, int line, int column, const std::string& what)
    : ValidationError(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

ZeroTable parse_zero_text(std::string_view text, const std::string& source_label) {
  ZeroTable table;
  table.source_label = source_label;
  int line_no = 0;
  int last_line = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    pos = end + 1;

    std::size_t first = 0;
    while (first < line.size() && is_space(line[first])) ++first;
    std::size_t last = line.size();
    while (last > first && is_space(line[last - 1])) --last;
    if (first == last || line[first] == '#') {
      if (end == text.size()) break;
      continue;
    }
    const char* begin = line.data() + first;
    const char* stop = line.data() + last;
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(begin, stop, value, std::chars_format::general);
    if (ec != std::errc() || ptr != stop) {
      const int col = static_cast<int>(first + (ec == std::errc() ? ptr - begin : 0)) + 1;
      throw ZeroFileError(source_label, line_no, col, "malformed number '" + std::string(begin, stop) + "'");
    }
    if (!std::isfinite(value))
      throw ZeroFileError(source_label, line_no, static_cast<int>(first) + 1, "ordinate is not finite");
    if (!table.ordinates.empty() && !(value > table.ordinates.back())) {
      throw ZeroFileError(source_label, line_no, static_cast<int>(first) + 1,
                          "ordinate " + io::format_double(value) + " does not exceed the previous (line " +
                              std::to_string(last_line) + ")");
    }
    if (table.ordinates.empty() && !(value > 14.0))
      throw ZeroFileError(source_label, line_no, static_cast<int>(first) + 1,
                          "first ordinate must exceed 14 (the lowest zero is near 14.1347)");
    table.ordinates.push_back(value);
    last_line = line_no;
    if (end == text.size()) break;
  }
  if (table.ordinates.empty()) throw ZeroFileError(source_label, line_no, 1, "no ordinates in file");
  return table;
}

ZeroTable parse_zero_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open zero file '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_zero_text(buffer.str(), path.string());
}

void write_zero_table(const ZeroTable& table, std::ostream& out) {
  out << "# gpue-lab zero table v1\n";
  out << "# source: " << table.source_label << "\n";
  for (double v : table.ordinates) out << io::format_double(v) << "\n";
}

double smooth_zero_count(double t) {
  const double u = t / kTwoPi;
  return u * std::log(u) - u + 0.875;
}

double smooth_zero_count_inverse(double n) {
  if (!(n > smooth_zero_count(kTwoPi))) throw ValidationError("smooth_zero_count_inverse: target below the minimum -1/8");
  double lo = kTwoPi;
  double hi = 2.0 * kTwoPi;
  while (smooth_zero_count(hi) < n) hi *= 2.0;
  double t = 0.5 * (lo + hi);
  for (int iter = 0; iter < 200; ++iter) {
    const double f = smooth_zero_count(t) - n;
    if (f > 0.0) hi = t; else lo = t;
    const double slope = std::log(t / kTwoPi) / kTwoPi;
    double next = t - f / slope;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - t) <= 1e-15 * t) return next;
    t = next;
  }
  return t;
}

UnfoldedSequence unfold(const ZeroTable& table) {
  if (table.ordinates.empty()) throw ValidationError("unfold: empty zero table");
  UnfoldedSequence out;
  out.values.reserve(table.ordinates.size());
  for (double t : table.ordinates) out.values.push_back(smooth_zero_count(t));
  return out;
}

}  // namespace gpue::zeros
