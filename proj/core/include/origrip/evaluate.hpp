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

#ifndef ORIGRIP_EVALUATE_HPP_
#define ORIGRIP_EVALUATE_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "origrip/scenario.hpp"

namespace origrip {

using Json = nlohmann::ordered_json;

std::string_view version();

struct ResultRecord {
  std::string command;
  std::string inputs_digest;  // FNV-1a 64 of the canonical scenario, hex
  Json outputs;
  std::string version;

  bool operator==(const ResultRecord&) const = default;
};

Json to_json(const ResultRecord& record);
ResultRecord record_from_json(const Json& json);

std::string scenario_digest(const Scenario& scenario);

// Command-level overrides shared by the CLI and sweeps.
struct EvalOptions {
  std::optional<double> theta;
  std::optional<double> mu;
  std::optional<std::string> material;
  std::optional<double> lift_step;
  std::optional<std::uint64_t> seed;  // perturbs materials within their bands
};

// Runs the command implied by the scenario kind:
//   single_grasp -> "grasp", pullout -> "pullout",
//   stacked -> "multi", pick_place -> "compare".
ResultRecord evaluate(const Scenario& scenario, const MaterialLibrary& library,
                      const EvalOptions& options = {});

// Numeric leaves of the serialised scenario, as dotted paths.
std::vector<std::string> sweepable_paths(const Scenario& scenario);

// Returns a copy with the numeric leaf at `path` replaced. Throws
// DomainError listing sweepable paths when `path` is not one of them.
Scenario with_parameter(const Scenario& scenario, std::string_view path, double value,
                        const MaterialLibrary& library);

// One record per value, in input order. Values are evaluated concurrently.
std::vector<ResultRecord> run_sweep(const Scenario& base, std::string_view axis,
                                    std::span<const double> values,
                                    const MaterialLibrary& library,
                                    const EvalOptions& options = {});

}  // namespace origrip

#endif  // ORIGRIP_EVALUATE_HPP_
