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

#ifndef ORIGRIP_REPORT_HPP_
#define ORIGRIP_REPORT_HPP_

#include <span>
#include <string>
#include <string_view>

#include "origrip/evaluate.hpp"
#include "origrip/trajectory.hpp"

namespace origrip {

enum class Format { Csv, Json };

// Throws DomainError for anything but "csv" or "json".
Format format_from_string(std::string_view name);

std::string render_kinematics(const GripperConfig& config, double step_deg, Format format);

std::string render_material_curve(const MaterialModel& material, double strain_step,
                                  double angle_step, Format format);

std::string render_record(const ResultRecord& record, Format format);

// One row (CSV) or element (JSON) per record; `axis` labels the swept value.
std::string render_sweep(std::string_view axis, std::span<const double> values,
                         std::span<const ResultRecord> records, Format format);

std::string render_waypoints(const Trajectory& sequential, const Trajectory& multi);

// Every demo scene evaluated plus both built-in material curves, in a fixed
// order. Used to check run-to-run determinism.
std::string render_demo_suite(Format format);

}  // namespace origrip

#endif  // ORIGRIP_REPORT_HPP_
