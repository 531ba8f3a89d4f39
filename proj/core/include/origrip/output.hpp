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

#ifndef ORIGRIP_OUTPUT_HPP_
#define ORIGRIP_OUTPUT_HPP_

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace origrip {

// Six significant digits, "%.6g" style. -0 prints as 0.
std::string format_number(double value);

// Rounds to six significant digits; used before values enter JSON output.
double round_sig(double value);

// RFC 4180 CSV with LF line endings.
class CsvWriter {
 public:
  explicit CsvWriter(std::vector<std::string> header);

  CsvWriter& row(std::vector<std::string> cells);
  std::string str() const;

  static std::string quote(std::string_view cell);

 private:
  std::size_t columns_;
  std::string text_;
};

}  // namespace origrip

#endif  // ORIGRIP_OUTPUT_HPP_
