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

#include "tdlme/csv.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <stdexcept>

#include "tdlme/errors.hpp"

namespace tdlme {

namespace {

void write_field(std::ostream& out, const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) {
    out << s;
    return;
  }
  out << '"';
  for (char c : s) {
    if (c == '"') out << '"';
    out << c;
  }
  out << '"';
}

std::string cell_text(const CsvCell& cell) {
  if (const auto* d = std::get_if<double>(&cell)) return format_double(*d);
  if (const auto* i = std::get_if<long long>(&cell)) return std::to_string(*i);
  return std::get<std::string>(cell);
}

}  // namespace

void CsvTable::add_row(std::vector<CsvCell> row) {
  if (row.size() != header.size()) {
    throw ContractViolation("CsvTable: row has " + std::to_string(row.size()) + " cells, header has " +
                            std::to_string(header.size()));
  }
  rows.push_back(std::move(row));
}

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::scientific, 16);
  return std::string(buf, res.ptr);
}

void write_csv(const CsvTable& table, std::ostream& out) {
  for (std::size_t k = 0; k < table.header.size(); ++k) {
    if (k) out << ',';
    write_field(out, table.header[k]);
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k) out << ',';
      write_field(out, cell_text(row[k]));
    }
    out << '\n';
  }
}

void emit_csv(const CsvTable& table, const std::string& path) {
  if (path.empty() || path == "-") {
    write_csv(table, std::cout);
    std::cout.flush();
    if (!std::cout) throw std::runtime_error("failed writing CSV to stdout");
    return;
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  write_csv(table, f);
  f.close();
  if (!f) throw std::runtime_error("failed writing " + path);
}

std::vector<std::vector<std::string>> parse_csv(std::string_view text) {
  std::vector<std::vector<std::string>> out;
  std::vector<std::string> record;
  std::string field;
  bool quoted = false;
  bool any = false;
  for (std::size_t k = 0; k < text.size(); ++k) {
    const char c = text[k];
    if (quoted) {
      if (c == '"') {
        if (k + 1 < text.size() && text[k + 1] == '"') {
          field += '"';
          ++k;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
      continue;
    }
    any = true;
    if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      record.push_back(std::move(field));
      field.clear();
    } else if (c == '\n') {
      record.push_back(std::move(field));
      field.clear();
      out.push_back(std::move(record));
      record.clear();
      any = false;
    } else if (c != '\r') {
      field += c;
    }
  }
  if (any || !field.empty() || !record.empty()) {
    record.push_back(std::move(field));
    out.push_back(std::move(record));
  }
  return out;
}

}  // namespace tdlme
