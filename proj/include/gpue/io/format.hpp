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

#ifndef GPUE_IO_FORMAT_HPP_
#define GPUE_IO_FORMAT_HPP_

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace gpue::io {

inline constexpr const char* kSchemaHeader = "# gpue-lab v1";

// Shortest decimal that parses back to the same double.
std::string format_double(double value);

// Column-oriented CSV: a schema comment line, a header row, then one row per
// index. All columns must have equal length.
struct CsvColumn {
  std::string name;
  std::vector<double> values;
};

void write_csv(std::ostream& out, std::span<const CsvColumn> columns);

}  // namespace gpue::io

#endif  // GPUE_IO_FORMAT_HPP_
