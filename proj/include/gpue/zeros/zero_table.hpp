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

#ifndef GPUE_ZEROS_ZERO_TABLE_HPP_
#define GPUE_ZEROS_ZERO_TABLE_HPP_

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "gpue/error.hpp"

namespace gpue::zeros {

// Ascending heights sigma_n of nontrivial zeta zeros 1/2 + i sigma_n.
struct ZeroTable {
  std::vector<double> ordinates;
  std::string source_label;
};

struct UnfoldedSequence {
  std::vector<double> values;
};

// Malformed zero file; line and column are 1-based.
class ZeroFileError : public ValidationError {
 public:
  ZeroFileError(const std::string& source, int line, int column, const std::string& what);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// One decimal ordinate per line; lines starting with '#' and blank lines are
// skipped. Ordinates must be strictly ascending and the first must exceed 14.
ZeroTable parse_zero_text(std::string_view text, const std::string& source_label);
// ValidationError if the file cannot be opened.
ZeroTable parse_zero_file(const std::filesystem::path& path);

// Writes a header comment and shortest round-trip decimals, so parsing the
// output reproduces the ordinates bit for bit.
void write_zero_table(const ZeroTable& table, std::ostream& out);

// Smooth zero-counting function (T/2pi) ln(T/2pi) - T/2pi + 7/8.
double smooth_zero_count(double t);
// Inverse of smooth_zero_count on T > 2 pi, where it is increasing.
double smooth_zero_count_inverse(double n);

// values[n] = smooth_zero_count(ordinates[n]).
UnfoldedSequence unfold(const ZeroTable& table);

}  // namespace gpue::zeros

#endif  // GPUE_ZEROS_ZERO_TABLE_HPP_
