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

#ifndef ORIGRIP_TRAJECTORY_HPP_
#define ORIGRIP_TRAJECTORY_HPP_

#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "origrip/multiobject_planner.hpp"

namespace origrip {

struct PickPlaceScene {
  Eigen::Vector2d pick = Eigen::Vector2d::Zero();
  Eigen::Vector2d place_bottom{300.0, 0.0};
  Eigen::Vector2d place_top{300.0, 50.0};
  double approach_height = 60.0;  // mm
  double descend_speed = 10.0;    // mm/s, also used for ascent
  double travel_speed = 50.0;     // mm/s
  double grasp_dwell = 2.0;       // s
  double release_dwell = 2.0;     // s

  void validate() const;

  bool operator==(const PickPlaceScene&) const = default;
};

enum class Strategy { Sequential, MultiObject };
enum class Action { Start, Descend, Ascend, Travel, Grasp, Release };

std::string_view to_string(Strategy strategy);
std::string_view to_string(Action action);

struct Waypoint {
  Eigen::Vector3d position = Eigen::Vector3d::Zero();  // mm
  double time = 0.0;                                   // s
  Action action = Action::Start;
};

// Waypoints carry the action that ended at them; the first waypoint is the
// start pose at time 0.
struct Trajectory {
  std::vector<Waypoint> waypoints;
};

// Sequential: two full pick -> place cycles (top object first, since it
// sits on the stack), with a return to the pick site in between.
// MultiObject: one pick, then the bottom and top releases. Throws
// DomainError for MultiObject when `plan` is not feasible.
Trajectory build_trajectory(const PickPlaceScene& scene, Strategy strategy,
                            const PlanOutcome& plan);

double path_distance(const Trajectory& trajectory);
double process_time(const Trajectory& trajectory);

// Appends b after a; b must start where a ends.
Trajectory concatenate(const Trajectory& a, const Trajectory& b);

struct StrategyMetrics {
  double distance = 0.0;  // mm
  double time = 0.0;      // s
};

struct Comparison {
  StrategyMetrics sequential;
  StrategyMetrics multi;
  double distance_reduction = 0.0;  // percent
  double time_reduction = 0.0;      // percent
};

Comparison compare(const PickPlaceScene& scene, const PlanOutcome& plan);

// Path the multi-object strategy saves:
// |pick->top| + |top->pick| - |bottom->top| of horizontal travel plus one
// descend/ascend pair.
double eliminated_distance(const PickPlaceScene& scene);

// Moves place_bottom/place_top radially (keeping their offset) and picks a
// travel speed so that compare() reports the target reductions. Throws
// RangeError when a target lies outside what the layout can produce.
PickPlaceScene calibrate_layout(const PickPlaceScene& base, const PlanOutcome& plan,
                                double target_distance_reduction,
                                double target_time_reduction);

}  // namespace origrip

#endif  // ORIGRIP_TRAJECTORY_HPP_
