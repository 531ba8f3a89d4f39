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

#ifndef ORIGRIP_SCENARIO_HPP_
#define ORIGRIP_SCENARIO_HPP_

#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "origrip/errors.hpp"
#include "origrip/grasp_engine.hpp"
#include "origrip/module_mechanics.hpp"
#include "origrip/multiobject_planner.hpp"
#include "origrip/trajectory.hpp"

namespace origrip {

// Scenario files are JSON documents with a strict schema. Units are fixed:
// mm, N, deg, kg, s. Torques are N*mm times environment.torque_unit_scale.
//
//   {
//     "name": "...",                       optional
//     "kind": "single_grasp" | "pullout" | "stacked" | "pick_place",
//     "gripper": { "finger_count": 2|4, ... optional geometry ... },
//     "materials": { "NAME": { ... } },    optional, extends the library
//     "objects": [ { "name", "kind", "dims", "mass", "pose" } ],
//     "environment": { "mu", "gravity", "torque_unit_scale" },
//     "scene": { ... kind specific ... }
//   }

enum class SceneKind { SingleGrasp, Pullout, Stacked, PickPlace };
std::string_view to_string(SceneKind kind);

struct Environment {
  double mu = 0.5;
  double gravity = 9.81;
  double torque_unit_scale = kDefaultTorqueUnitScale;

  bool operator==(const Environment&) const = default;
};

struct SingleGraspParams {
  std::string object;
  double theta = 0.0;
  std::string material;

  bool operator==(const SingleGraspParams&) const = default;
};

struct PulloutParams {
  std::string object;
  double theta = 0.0;
  std::string material;
  double lift_step = 1.0;

  bool operator==(const PulloutParams&) const = default;
};

struct StackedParams {
  std::string top;
  std::string bottom;
  std::string material;
  double stack_gap = 0.0;
  double safety = 1.2;

  bool operator==(const StackedParams&) const = default;
};

struct PickPlaceParams {
  StackedParams stack;
  PickPlaceScene layout;

  bool operator==(const PickPlaceParams&) const = default;
};

using SceneParams = std::variant<SingleGraspParams, PulloutParams, StackedParams, PickPlaceParams>;

// Named materials available to a scenario: the built-in table, or the file
// named by $ORIGRIP_MATERIALS when set.
using MaterialLibrary = std::map<std::string, MaterialModel, std::less<>>;

inline constexpr const char* kMaterialsEnvVar = "ORIGRIP_MATERIALS";

MaterialLibrary builtin_material_library();
// Reads $ORIGRIP_MATERIALS if set, otherwise returns the built-ins.
MaterialLibrary default_material_library();
MaterialLibrary parse_material_table(std::string_view text);

struct Scenario {
  std::string name;
  SceneKind kind = SceneKind::SingleGrasp;
  GripperConfig gripper{};
  MaterialLibrary materials;  // declared in the file
  std::vector<ObjectShape> objects;
  Environment environment{};
  SceneParams params;

  const ObjectShape& object(std::string_view object_name) const;
  // File-declared materials shadow the library.
  MaterialModel material(std::string_view material_name,
                         const MaterialLibrary& library) const;

  bool operator==(const Scenario&) const = default;
};

// Validates everything and reports every problem at once via
// ValidationError.
Scenario parse_scenario(std::string_view text,
                        const MaterialLibrary& library = default_material_library());

// Full-precision JSON; parse_scenario(serialize_scenario(s)) == s.
std::string serialize_scenario(const Scenario& scenario);

// Demo scenes shipped with the library (scenes/*.json).
std::vector<std::string> demo_scene_names();
std::string_view demo_scene_text(std::string_view name);  // throws DomainError
Scenario demo_scene(std::string_view name);

// Builds the planner scene for stacked / pick-and-place scenarios.
StackedScene stacked_scene(const Scenario& scenario, const MaterialLibrary& library);

}  // namespace origrip

#endif  // ORIGRIP_SCENARIO_HPP_
