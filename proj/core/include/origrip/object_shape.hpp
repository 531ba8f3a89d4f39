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

#ifndef ORIGRIP_OBJECT_SHAPE_HPP_
#define ORIGRIP_OBJECT_SHAPE_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace origrip {

enum class ShapeKind { Sphere, Cube, Cuboid, Cylinder, CurvedBlock };

std::string_view to_string(ShapeKind kind);
std::optional<ShapeKind> shape_kind_from_string(std::string_view name);

// Planar placement plus the height of the object's base in the gripper
// frame. x/y are offsets from the gripper axis; yaw rotates the cross
// section about the vertical axis.
struct Pose {
  double x = 0.0;
  double y = 0.0;
  double yaw = 0.0;     // deg
  double base_z = 0.0;  // mm, gripper frame
  int stack_level = 0;  // 0 = bottom of a stack

  bool operator==(const Pose&) const = default;
};

// Rigid canonical object. Dimension layout per kind (all mm):
//   Sphere      {diameter}
//   Cube        {edge}
//   Cuboid      {width, depth, height}   width lies along yaw = 0
//   Cylinder    {diameter, height}       axis vertical
//   CurvedBlock {radius, width, height}  barrel whose side profile is an arc
//                                        of `radius`, `width` across at its
//                                        widest section
struct ObjectShape {
  std::string name;
  ShapeKind kind = ShapeKind::Cube;
  std::vector<double> dims;
  double mass = 0.0;  // kg
  Pose pose{};

  static ObjectShape sphere(double diameter, double mass = 0.0);
  static ObjectShape cube(double edge, double mass = 0.0);
  static ObjectShape cuboid(double width, double depth, double height, double mass = 0.0);
  static ObjectShape cylinder(double diameter, double height, double mass = 0.0);
  static ObjectShape curved_block(double radius, double width, double height,
                                  double mass = 0.0);

  // Throws DomainError on a malformed shape.
  void validate() const;

  double height() const;

  // True when the side profile is a circular arc (sphere, curved block).
  bool has_curved_profile() const;
  // Radius of curvature of the side profile in the vertical closure plane;
  // +inf for flat-sided shapes.
  double profile_radius() const;
  // Height of the widest section above the object's base.
  double widest_height() const;

  // Distance from the vertical axis to the surface along the horizontal
  // direction `azimuth_deg` (gripper frame), at height `local_z` above the
  // base. Returns 0 outside [0, height()].
  double half_extent(double azimuth_deg, double local_z) const;

  // Extent along the closure axis at the widest section.
  double grasp_width(double azimuth_deg = 0.0) const;

  // Radius of the smallest horizontal circle containing the cross section.
  double bounding_radius() const;

  // Elevation (deg) of the outward surface normal at local_z; positive
  // when the normal points upward. Zero for flat-sided shapes.
  double normal_elevation(double local_z) const;

  bool operator==(const ObjectShape&) const = default;
};

}  // namespace origrip

#endif  // ORIGRIP_OBJECT_SHAPE_HPP_
