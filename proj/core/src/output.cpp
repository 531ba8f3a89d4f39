// Copyright 2026 The Origrip Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "origrip/output.hpp"

#include <cmath>
#include <cstdlib>

#include <fmt/format.h>

#include "origrip/errors.hpp"

namespace origrip {

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (value == 0.0) return "0";  // folds -0
  return fmt::format("{:.6g}", value);
}

double round_sig(double value) {
  if (!std::isfinite(value) || value == 0.0) return value == 0.0 ? 0.0 : value;
  return std::strtod(format_number(value).c_str(), nullptr);
}

CsvWriter::CsvWriter(std::vector<std::string> header) : columns_(header.size()) {
  row(std::move(header));
}

CsvWriter& CsvWriter::row(std::vector<std::string> cells) {
  if (cells.size() != columns_) {
    throw DomainError(fmt::format("csv row has {} cells, header has {}", cells.size(), columns_));
  }
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) text_ += ',';
    text_ += quote(cells[i]);
  }
  text_ += '\n';
  return *this;
}

std::string CsvWriter::str() const { return text_; }

std::string CsvWriter::quote(std::string_view cell) {
  if (cell.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(cell);
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace origrip
