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

#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "origrip/errors.hpp"
#include "origrip/object_shape.hpp"

namespace origrip {
namespace {

TEST(ObjectShape, KindNamesRoundTrip) {
  for (auto k : {ShapeKind::Sphere, ShapeKind::Cube, ShapeKind::Cuboid, ShapeKind::Cylinder,
                 ShapeKind::CurvedBlock}) {
    EXPECT_EQ(shape_kind_from_string(to_string(k)), k);
  }
  EXPECT_FALSE(shape_kind_from_string("torus"));
}

TEST(ObjectShape, GraspWidthPerKind) {
  EXPECT_DOUBLE_EQ(ObjectShape::sphere(60).grasp_width(), 60.0);
  EXPECT_DOUBLE_EQ(ObjectShape::cube(50).grasp_width(), 50.0);
  EXPECT_DOUBLE_EQ(ObjectShape::cuboid(64.5, 45.4, 100).grasp_width(0.0), 64.5);
  EXPECT_NEAR(ObjectShape::cuboid(64.5, 45.4, 100).grasp_width(90.0), 45.4, 1e-12);
  EXPECT_DOUBLE_EQ(ObjectShape::cylinder(40, 80).grasp_width(33.0), 40.0);
  EXPECT_DOUBLE_EQ(ObjectShape::curved_block(45.5, 70, 60).grasp_width(), 70.0);
}

TEST(ObjectShape, RotatedCubeReachesCorner) {
  auto c = ObjectShape::cube(50);
  c.pose.yaw = 45.0;
  EXPECT_NEAR(c.grasp_width(0.0), 50.0 * std::numbers::sqrt2, 1e-9);
  EXPECT_NEAR(c.bounding_radius(), 25.0 * std::numbers::sqrt2, 1e-12);
}

TEST(ObjectShape, SphereProfile) {
  const auto s = ObjectShape::sphere(60);
  EXPECT_DOUBLE_EQ(s.half_extent(0.0, 30.0), 30.0);
  EXPECT_NEAR(s.half_extent(0.0, 0.0), 0.0, 1e-12);
  EXPECT_NEAR(s.half_extent(0.0, 12.0), std::sqrt(30.0 * 30.0 - 18.0 * 18.0), 1e-12);
  EXPECT_EQ(s.half_extent(0.0, -1.0), 0.0);
  EXPECT_EQ(s.half_extent(0.0, 61.0), 0.0);
  EXPECT_NEAR(s.normal_elevation(60.0), 90.0, 1e-12);
  EXPECT_NEAR(s.normal_elevation(15.0), -30.0, 1e-12);
}

TEST(ObjectShape, CurvedBlockWithFullArcMatchesSphere) {
  const auto s = ObjectShape::sphere(91);
  const auto b = ObjectShape::curved_block(45.5, 91, 91);
  std::mt19937 rng(4);
  std::uniform_real_distribution<double> z(0.0, 91.0);
  for (int i = 0; i < 200; ++i) {
    const double h = z(rng);
    EXPECT_NEAR(s.half_extent(0.0, h), b.half_extent(0.0, h), 1e-9);
    EXPECT_NEAR(s.normal_elevation(h), b.normal_elevation(h), 1e-9);
  }
}

TEST(ObjectShape, FlatShapesHaveNoCurvature) {
  EXPECT_TRUE(std::isinf(ObjectShape::cube(50).profile_radius()));
  EXPECT_FALSE(ObjectShape::cylinder(40, 80).has_curved_profile());
  EXPECT_EQ(ObjectShape::cuboid(10, 20, 30).normal_elevation(5.0), 0.0);
}

TEST(ObjectShape, Validation) {
  EXPECT_NO_THROW(ObjectShape::curved_block(45.5, 70, 60).validate());
  EXPECT_THROW(ObjectShape::sphere(-1).validate(), DomainError);
  EXPECT_THROW(ObjectShape::cube(50, -0.1).validate(), DomainError);
  EXPECT_THROW(ObjectShape::curved_block(20, 70, 60).validate(), DomainError);
  EXPECT_THROW(ObjectShape::curved_block(45.5, 10, 90).validate(), DomainError);
  ObjectShape bad = ObjectShape::cuboid(1, 2, 3);
  bad.dims.pop_back();
  EXPECT_THROW(bad.validate(), DomainError);
}

}  // namespace
}  // namespace origrip
