// Copyright 2026 The tdlme Authors
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

#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace tdlme {

using CsvCell = std::variant<double, long long, std::string>;

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<CsvCell>> rows;

  /// Throws ContractViolation when the row width differs from the header.
  void add_row(std::vector<CsvCell> row);
};

/// Scientific notation with 17 significant digits, e.g. 1.0000000000000000e+00.
std::string format_double(double v);

void write_csv(const CsvTable& table, std::ostream& out);
/// Writes to path, or to stdout when path is empty or "-". Throws std::runtime_error on I/O failure.
void emit_csv(const CsvTable& table, const std::string& path);

/// Splits RFC-4180 text into records of raw fields (quotes removed).
std::vector<std::vector<std::string>> parse_csv(std::string_view text);

}  // namespace tdlme
