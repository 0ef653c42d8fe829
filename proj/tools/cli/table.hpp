// Copyright 2026 The mqc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace mqc::cli {

// Empty cells serialize as "" in CSV and null in JSON.
using Cell = std::variant<std::monostate, double, long long, bool, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  // Throws std::logic_error when the width does not match the header.
  void add_row(std::vector<Cell> row);
  std::size_t column(const std::string& name) const;
};

enum class Format { kCsv, kJson };

Format parse_format(const std::string& name);

// 17 significant digits; "nan", "inf", "-inf" for non-finite values.
std::string format_number(double value);

void write_csv(const Table& table, std::ostream& out);
// Array of objects, one per row, keys in column order.
void write_json(const Table& table, std::ostream& out);
void write_table(const Table& table, Format format, std::ostream& out);

}  // namespace mqc::cli
