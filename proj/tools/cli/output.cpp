// Copyright 2026 The seqmdi Authors
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

#include "cli/output.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>
#include <system_error>

namespace seqmdi::cli {
namespace {

nlohmann::ordered_json cell_to_json(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> nlohmann::ordered_json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) {
          return round_significant(v);
        } else {
          return v;
        }
      },
      cell);
}

std::string cell_to_csv(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) {
          return format_double(v);
        } else if constexpr (std::is_same_v<T, std::int64_t>) {
          return std::to_string(v);
        } else {
          return v;
        }
      },
      cell);
}

}  // namespace

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) throw std::logic_error("row width does not match header");
  rows.push_back(std::move(row));
}

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  // Avoid "-0".
  if (value == 0.0) value = 0.0;
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general,
                                 kSignificantDigits);
  if (res.ec != std::errc()) throw std::runtime_error("double formatting failed");
  return std::string(buf, res.ptr);
}

double round_significant(double value) {
  if (!std::isfinite(value)) return value;
  const std::string text = format_double(value);
  double out = 0.0;
  std::from_chars(text.data(), text.data() + text.size(), out);
  return out;
}

void write_csv(std::ostream& os, const Table& table) {
  for (std::size_t k = 0; k < table.columns.size(); ++k) {
    os << (k ? "," : "") << table.columns[k];
  }
  os << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t k = 0; k < row.size(); ++k) os << (k ? "," : "") << cell_to_csv(row[k]);
    os << '\n';
  }
}

void write_json(std::ostream& os, const Table& table) {
  nlohmann::ordered_json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = table.command;
  doc["parameters"] = table.parameters;
  doc["columns"] = table.columns;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    auto r = nlohmann::ordered_json::array();
    for (const auto& cell : row) r.push_back(cell_to_json(cell));
    rows.push_back(std::move(r));
  }
  doc["rows"] = std::move(rows);
  os << doc.dump(2) << '\n';
}

void write_table(std::ostream& os, const Table& table, OutputFormat format) {
  if (format == OutputFormat::Json) {
    write_json(os, table);
  } else {
    write_csv(os, table);
  }
}

}  // namespace seqmdi::cli
