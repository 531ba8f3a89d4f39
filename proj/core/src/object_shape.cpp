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

#include "origrip/object_shape.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include <fmt/format.h>

#include "origrip/errors.hpp"

namespace origrip {
namespace {

constexpr double kDeg = std::numbers::pi / 180.0;

constexpr std::array<std::pair<ShapeKind, std::string_view>, 5> kKindNames{{
    {ShapeKind::Sphere, "sphere"},
    {ShapeKind::Cube, "cube"},
    {ShapeKind::Cuboid, "cuboid"},
    {ShapeKind::Cylinder, "cylinder"},
    {ShapeKind::CurvedBlock, "curved_block"},
}};

std::size_t expected_dims(ShapeKind kind) {
  switch (kind) {
    case ShapeKind::Sphere: return 1;
    case ShapeKind::Cube: return 1;
    case ShapeKind::Cuboid: return 3;
    case ShapeKind::Cylinder: return 2;
    case ShapeKind::CurvedBlock: return 3;
  }
  return 0;
}

// Side profile of a barrel: half width at height z for an arc of radius r
// whose widest point (half width `half`) sits at zc.
double arc_profile(double half, double r, double zc, double z) {
  const double dz = z - zc;
  const double under = r * r - dz * dz;
  if (under <= 0.0) return std::max(0.0, half - r);
  return half - r + std::sqrt(under);
}

}  // namespace

std::string_view to_string(ShapeKind kind) {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

std::optional<ShapeKind> shape_kind_from_string(std::string_view name) {
  for (const auto& [k, n] : kKindNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

ObjectShape ObjectShape::sphere(double diameter, double mass) {
  return ObjectShape{"sphere", ShapeKind::Sphere, {diameter}, mass, {}};
}

ObjectShape ObjectShape::cube(double edge, double mass) {
  return ObjectShape{"cube", ShapeKind::Cube, {edge}, mass, {}};
}

ObjectShape ObjectShape::cuboid(double width, double depth, double height, double mass) {
  return ObjectShape{"cuboid", ShapeKind::Cuboid, {width, depth, height}, mass, {}};
}

ObjectShape ObjectShape::cylinder(double diameter, double height, double mass) {
  return ObjectShape{"cylinder", ShapeKind::Cylinder, {diameter, height}, mass, {}};
}

ObjectShape ObjectShape::curved_block(double radius, double width, double height, double mass) {
  return ObjectShape{"curved_block", ShapeKind::CurvedBlock, {radius, width, height}, mass, {}};
}

void ObjectShape::validate() const {
  if (dims.size() != expected_dims(kind)) {
    throw DomainError(fmt::format("{} '{}' needs {} dims, got {}", to_string(kind), name,
                                  expected_dims(kind), dims.size()));
  }
  for (double d : dims) {
    if (!(d > 0.0) || !std::isfinite(d)) {
      throw DomainError(fmt::format("'{}': all dims must be finite and > 0", name));
    }
  }
  if (!(mass >= 0.0) || !std::isfinite(mass)) {
    throw DomainError(fmt::format("'{}': mass must be >= 0", name));
  }
  if (kind == ShapeKind::CurvedBlock) {
    const double r = dims[0], w = dims[1], h = dims[2];
    if (h > 2.0 * r) {
      throw DomainError(fmt::format("'{}': height {} exceeds the arc chord 2*radius = {}", name, h,
                                    2.0 * r));
    }
    if (arc_profile(0.5 * w, r, 0.5 * h, 0.0) <= 0.0) {
      throw DomainError(fmt::format("'{}': width too small for radius and height", name));
    }
  }
}

double ObjectShape::height() const {
  switch (kind) {
    case ShapeKind::Sphere: return dims[0];
    case ShapeKind::Cube: return dims[0];
    case ShapeKind::Cuboid: return dims[2];
    case ShapeKind::Cylinder: return dims[1];
    case ShapeKind::CurvedBlock: return dims[2];
  }
  return 0.0;
}

bool ObjectShape::has_curved_profile() const {
  return kind == ShapeKind::Sphere || kind == ShapeKind::CurvedBlock;
}

double ObjectShape::profile_radius() const {
  switch (kind) {
    case ShapeKind::Sphere: return 0.5 * dims[0];
    case ShapeKind::CurvedBlock: return dims[0];
    default: return std::numeric_limits<double>::infinity();
  }
}

namespace {

// |cos|, |sin| of an angle in degrees, exact on quarter turns.
std::pair<double, double> abs_cos_sin(double deg) {
  const double q = std::fmod(std::abs(deg), 180.0);
  if (q == 0.0) return {1.0, 0.0};
  if (q == 90.0) return {0.0, 1.0};
  return {std::abs(std::cos(deg * kDeg)), std::abs(std::sin(deg * kDeg))};
}

}  // namespace

double ObjectShape::widest_height() const { return 0.5 * height(); }

double ObjectShape::half_extent(double azimuth_deg, double local_z) const {
  if (local_z < 0.0 || local_z > height()) return 0.0;
  const auto [c, sn] = abs_cos_sin(azimuth_deg - pose.yaw);
  switch (kind) {
    case ShapeKind::Sphere: {
      const double r = 0.5 * dims[0];
      return arc_profile(r, r, r, local_z);
    }
    case ShapeKind::Cube:
      return 0.5 * dims[0] * (c + sn);
    case ShapeKind::Cuboid:
      return 0.5 * dims[0] * c + 0.5 * dims[1] * sn;
    case ShapeKind::Cylinder:
      return 0.5 * dims[0];
    case ShapeKind::CurvedBlock:
      return arc_profile(0.5 * dims[1], dims[0], 0.5 * dims[2], local_z);
  }
  return 0.0;
}

double ObjectShape::grasp_width(double azimuth_deg) const {
  return 2.0 * half_extent(azimuth_deg, widest_height());
}

double ObjectShape::bounding_radius() const {
  switch (kind) {
    case ShapeKind::Sphere: return 0.5 * dims[0];
    case ShapeKind::Cube: return dims[0] / std::numbers::sqrt2;
    case ShapeKind::Cuboid: return 0.5 * std::hypot(dims[0], dims[1]);
    case ShapeKind::Cylinder: return 0.5 * dims[0];
    case ShapeKind::CurvedBlock: return 0.5 * dims[1];
  }
  return 0.0;
}

double ObjectShape::normal_elevation(double local_z) const {
  if (!has_curved_profile()) return 0.0;
  const double s = std::clamp((local_z - widest_height()) / profile_radius(), -1.0, 1.0);
  return std::asin(s) / kDeg;
}

}  // namespace origrip
