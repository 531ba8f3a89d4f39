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

#ifndef ORIGRIP_ERRORS_HPP_
#define ORIGRIP_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <vector>

namespace origrip {

// Raised when an argument lies outside the mathematical domain of an
// operation (negative lengths, angles outside the servo range, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Raised when a requested value cannot be reached. Carries the achievable
// interval so callers can report or clamp.
class RangeError : public std::out_of_range {
 public:
  RangeError(const std::string& what, double lower, double upper)
      : std::out_of_range(what), lower_(lower), upper_(upper) {}

  double lower() const { return lower_; }
  double upper() const { return upper_; }

 private:
  double lower_;
  double upper_;
};

struct ValidationIssue {
  std::string path;     // dotted field path, e.g. "gripper.finger_count"
  std::string message;

  bool operator==(const ValidationIssue&) const = default;
};

// Aggregates every problem found while validating a document.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::vector<ValidationIssue> issues);

  const std::vector<ValidationIssue>& issues() const { return issues_; }

 private:
  std::vector<ValidationIssue> issues_;
};

}  // namespace origrip

#endif  // ORIGRIP_ERRORS_HPP_
