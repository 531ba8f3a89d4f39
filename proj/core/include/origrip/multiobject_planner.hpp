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

#ifndef ORIGRIP_MULTIOBJECT_PLANNER_HPP_
#define ORIGRIP_MULTIOBJECT_PLANNER_HPP_

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "origrip/grasp_engine.hpp"

namespace origrip {

// Two objects resting on each other, each facing one module level.
struct StackedScene {
  ObjectShape top;
  ObjectShape bottom;
  double stack_gap = 0.0;  // mm
  GripperConfig gripper{};
  MaterialModel material{};
  double mu = 0.5;
  double gravity = 9.81;
  double safety = 1.2;
  double torque_unit_scale = kDefaultTorqueUnitScale;
};

// Everything the hold predicate needs besides the object itself.
struct HoldContext {
  GripperConfig gripper{};
  MaterialModel material{};
  double mu = 0.5;
  double gravity = 9.81;
  double safety = 1.2;
  double torque_unit_scale = kDefaultTorqueUnitScale;

  static HoldContext from(const StackedScene& scene);
};

enum class LimitingFactor { StrainRange, LiftCapacity, OpeningRange };
std::string_view to_string(LimitingFactor factor);

struct HoldWindow {
  double theta_lo = 0.0;
  double theta_hi = 0.0;
  LimitingFactor limiting_factor = LimitingFactor::StrainRange;

  bool contains(double theta) const { return theta >= theta_lo && theta <= theta_hi; }
};

// An object is held at theta when every engaged module sits inside the
// compression plateau and the contacts lift the object with the safety
// factor applied.
bool holds_at(double theta_deg, const ObjectShape& placed, const HoldContext& context);

// Maximal servo-angle interval on which holds_at() is true; nullopt when
// empty. `placed` must already carry its stack pose.
std::optional<HoldWindow> hold_window(const ObjectShape& placed, const HoldContext& context);

// Applies stack poses: the interface between the objects (mid-gap) is
// aligned with the boundary between the two module levels.
std::pair<ObjectShape, ObjectShape> place_stack(const StackedScene& scene);

struct StageState {
  bool top_held = false;
  bool bottom_held = false;

  bool operator==(const StageState&) const = default;
};

inline constexpr std::array<StageState, 3> kExpectedTimeline{
    StageState{true, true}, StageState{true, false}, StageState{false, false}};

struct Plan {
  double theta_grasp = 0.0;
  double theta_release_bottom = 0.0;
  double theta_release_top = 0.0;
  std::array<StageState, 3> stage_states = kExpectedTimeline;

  bool operator==(const Plan&) const = default;
};

enum class Infeasibility {
  SizeOrdering,
  TopWindowEmpty,
  BottomWindowEmpty,
  EmptyGraspIntersection,
  EmptyReleaseGap,
  TopReleaseUnreachable,
};
std::string_view to_string(Infeasibility reason);

struct InfeasibilityReport {
  Infeasibility reason = Infeasibility::SizeOrdering;
  std::string message;
};

struct PlanOutcome {
  std::optional<Plan> plan;
  std::optional<InfeasibilityReport> infeasible;
  std::optional<HoldWindow> top_window;
  std::optional<HoldWindow> bottom_window;

  bool feasible() const { return plan.has_value(); }
};

PlanOutcome plan_stacked(const StackedScene& scene);

struct SimulationResult {
  std::array<StageState, 3> timeline{};
  std::array<double, 3> stage_theta{};
  bool passed = false;
  std::optional<int> failed_stage;  // 1-based
};

SimulationResult simulate_plan(const Plan& plan, const StackedScene& scene);

}  // namespace origrip

#endif  // ORIGRIP_MULTIOBJECT_PLANNER_HPP_
