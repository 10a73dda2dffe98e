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

#pragma once

// Tabular output shared by all subcommands.
//
// CSV: one lowercase snake_case header line, '.' decimal separator, doubles
// with 12 significant digits, '\n' line endings.
// JSON: {"schema_version": 1, "command", "parameters", "columns", "rows"},
// with doubles rounded to the same 12 significant digits.

#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace seqmdi::cli {

inline constexpr int kSchemaVersion = 1;
inline constexpr int kSignificantDigits = 12;

enum class OutputFormat { Csv, Json };

using Cell = std::variant<std::int64_t, double, std::string>;

struct Table {
  std::string command;
  nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
};

// Locale-independent, 12 significant digits, shortest form ("%.12g").
std::string format_double(double value);
// `value` rounded to 12 significant digits.
double round_significant(double value);

void write_csv(std::ostream& os, const Table& table);
void write_json(std::ostream& os, const Table& table);
void write_table(std::ostream& os, const Table& table, OutputFormat format);

}  // namespace seqmdi::cli
