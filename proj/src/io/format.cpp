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

#include "gpue/io/format.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <ostream>

#include "gpue/error.hpp"

namespace gpue::io {

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  std::array<char, 32> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc()) throw NumericalError("format_double: conversion failed");
  return std::string(buf.data(), ptr);
}

void write_csv(std::ostream& out, std::span<const CsvColumn> columns) {
  if (columns.empty()) throw ValidationError("write_csv: no columns");
  const std::size_t rows = columns.front().values.size();
  for (const auto& c : columns)
    if (c.values.size() != rows) throw ValidationError("write_csv: column '" + c.name + "' has a different length");
  out << kSchemaHeader << "\n";
  for (std::size_t j = 0; j < columns.size(); ++j) out << (j ? "," : "") << columns[j].name;
  out << "\n";
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < columns.size(); ++j) out << (j ? "," : "") << format_double(columns[j].values[i]);
    out << "\n";
  }
}

}  // namespace gpue::io
