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

#include <random>

#include <gtest/gtest.h>

#include "../support/oracles.hpp"
#include "origrip/multiobject_planner.hpp"

namespace origrip {
namespace {

StackedScene spheres(double top, double bottom) {
  StackedScene s;
  s.top = ObjectShape::sphere(top, 0.025);
  s.bottom = ObjectShape::sphere(bottom, 0.015);
  s.gripper.finger_count = 4;
  s.material = tpu95a();
  s.mu = 0.305543;
  return s;
}

HoldContext ctx_for(const StackedScene& s) { return HoldContext::from(s); }

TEST(HoldWindow, SphereExamples) {
  const auto scene = spheres(60, 50);
  const auto [top, bottom] = place_stack(scene);
  const auto wt = hold_window(top, ctx_for(scene));
  const auto wb = hold_window(bottom, ctx_for(scene));
  ASSERT_TRUE(wt && wb);
  // Openings d - 2*15*{0.5, 0.1} inverted through the linear law.
  EXPECT_NEAR(wt->theta_lo, 37.8, 1e-9);
  EXPECT_NEAR(wt->theta_hi, 59.4, 1e-9);
  EXPECT_NEAR(wb->theta_lo, 55.8, 1e-9);
  EXPECT_NEAR(wb->theta_hi, 77.4, 1e-9);
  EXPECT_EQ(wt->limiting_factor, LimitingFactor::StrainRange);
}

TEST(HoldWindow, OutOfWorkspace) {
  // Needs openings [85, 97] mm; the widest is 78.
  auto scene = spheres(60, 50);
  scene.top = ObjectShape::cube(100, 0.025);
  const auto [top, bottom] = place_stack(scene);
  EXPECT_FALSE(hold_window(top, ctx_for(scene)));
  // Too small for the narrowest opening.
  scene.bottom = ObjectShape::cube(30, 0.0);
  EXPECT_FALSE(hold_window(place_stack(scene).second, ctx_for(scene)));
}

TEST(HoldWindow, OpeningRangeClipsSmallObjects) {
  // A 40 mm cube needs openings [25, 37] mm; only down to 28 is reachable.
  auto scene = spheres(60, 50);
  scene.bottom = ObjectShape::cube(40, 0.0);
  const auto [top, bottom] = place_stack(scene);
  const auto w = hold_window(bottom, ctx_for(scene));
  ASSERT_TRUE(w);
  EXPECT_EQ(w->limiting_factor, LimitingFactor::OpeningRange);
  EXPECT_NEAR(w->theta_lo, 73.8, 1e-9);
  EXPECT_NEAR(w->theta_hi, 90.0, 1e-9);
}

TEST(HoldWindow, HeavyObjectIsLiftLimited) {
  auto scene = spheres(60, 50);
  scene.material = sil950();
  scene.top.mass = 0.1;
  const auto [top, bottom] = place_stack(scene);
  const auto ctx = ctx_for(scene);
  const auto w = hold_window(top, ctx);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->limiting_factor, LimitingFactor::LiftCapacity);
  const auto oracle = testing::sweep_window(top, ctx);
  ASSERT_FALSE(oracle.empty);
  EXPECT_NEAR(w->theta_lo, oracle.lo, 0.1 + 1e-9);
  EXPECT_NEAR(w->theta_hi, oracle.hi, 0.1 + 1e-9);
}

TEST(HoldWindow, MatchesBruteForceSweep) {
  std::mt19937 rng(21);
  int nonempty = 0;
  for (int i = 0; i < 50; ++i) {
    const auto scene = testing::random_stacked_scene(rng);
    const auto [top, bottom] = place_stack(scene);
    const auto ctx = ctx_for(scene);
    for (const auto* o : {&top, &bottom}) {
      const auto w = hold_window(*o, ctx);
      const auto sweep = testing::sweep_window(*o, ctx);
      if (!w) {
        EXPECT_TRUE(sweep.empty || sweep.hi - sweep.lo <= 0.1 + 1e-9) << "scene " << i;
        continue;
      }
      ++nonempty;
      ASSERT_FALSE(sweep.empty) << "scene " << i;
      EXPECT_NEAR(w->theta_lo, sweep.lo, 0.1 + 1e-9) << "scene " << i;
      EXPECT_NEAR(w->theta_hi, sweep.hi, 0.1 + 1e-9) << "scene " << i;
    }
  }
  EXPECT_GT(nonempty, 40);
}

TEST(HoldWindow, WiderObjectsShiftTowardSmallerAngles) {
  const HoldContext ctx = ctx_for(spheres(60, 50));
  const GripperConfig g;
  std::optional<HoldWindow> prev;
  for (double e = 40.0; e <= 70.0; e += 2.5) {
    const auto w = hold_window(centred_between_levels(ObjectShape::cube(e), g), ctx);
    ASSERT_TRUE(w) << e;
    if (prev) {
      EXPECT_LE(w->theta_lo, prev->theta_lo);
      EXPECT_LE(w->theta_hi, prev->theta_hi);
    }
    prev = w;
  }
}

TEST(PlanStacked, SphereDemo) {
  const auto out = plan_stacked(spheres(60, 50));
  ASSERT_TRUE(out.feasible());
  const auto& p = *out.plan;
  EXPECT_NEAR(p.theta_grasp, 57.6, 1e-9);
  EXPECT_GE(p.theta_grasp, 55.8);
  EXPECT_LE(p.theta_grasp, 59.4);
  EXPECT_GE(p.theta_release_bottom, 37.8);
  EXPECT_LT(p.theta_release_bottom, 55.8);
  EXPECT_TRUE(40.0 >= out.top_window->theta_lo && 40.0 < out.bottom_window->theta_lo);
  EXPECT_EQ(p.theta_release_top, 0.0);
  EXPECT_GE(p.theta_grasp, p.theta_release_bottom);
  EXPECT_GE(p.theta_release_bottom, p.theta_release_top);
  EXPECT_EQ(p.stage_states, kExpectedTimeline);
}

TEST(PlanStacked, OrderingViolated) {
  const auto out = plan_stacked(spheres(50, 60));
  ASSERT_FALSE(out.feasible());
  EXPECT_EQ(out.infeasible->reason, Infeasibility::SizeOrdering);
  EXPECT_NE(out.infeasible->message.find("smaller"), std::string::npos);
}

TEST(PlanStacked, EqualSizesHaveNoReleaseGap) {
  const auto out = plan_stacked(spheres(55, 55));
  ASSERT_FALSE(out.feasible());
  EXPECT_EQ(out.infeasible->reason, Infeasibility::EmptyReleaseGap);
}

TEST(PlanStacked, DisjointWindows) {
  const auto out = plan_stacked(spheres(70, 40));
  ASSERT_FALSE(out.feasible());
  EXPECT_EQ(out.infeasible->reason, Infeasibility::EmptyGraspIntersection);
}

TEST(SimulatePlan, DemoPasses) {
  const auto scene = spheres(60, 50);
  const auto sim = simulate_plan(*plan_stacked(scene).plan, scene);
  EXPECT_TRUE(sim.passed);
  EXPECT_EQ(sim.timeline, kExpectedTimeline);
  EXPECT_FALSE(sim.failed_stage);
}

TEST(SimulatePlan, ReleaseAtGraspAngleFailsStageTwo) {
  const auto scene = spheres(60, 50);
  auto plan = *plan_stacked(scene).plan;
  plan.theta_release_bottom = plan.theta_grasp;
  const auto sim = simulate_plan(plan, scene);
  EXPECT_FALSE(sim.passed);
  EXPECT_EQ(sim.failed_stage, 2);
}

TEST(SimulatePlan, TopReleaseInsideWindowFailsStageThree) {
  const auto scene = spheres(60, 50);
  auto plan = *plan_stacked(scene).plan;
  plan.theta_release_top = 45.0;
  plan.theta_release_bottom = 45.0;
  const auto sim = simulate_plan(plan, scene);
  EXPECT_FALSE(sim.passed);
  EXPECT_EQ(sim.failed_stage, 3);
}

TEST(SimulatePlan, EveryFeasibleRandomPlanPasses) {
  std::mt19937 rng(22);
  int feasible = 0;
  for (int i = 0; i < 100; ++i) {
    const auto scene = testing::random_stacked_scene(rng);
    const auto out = plan_stacked(scene);
    if (!out.feasible()) continue;
    ++feasible;
    EXPECT_TRUE(simulate_plan(*out.plan, scene).passed) << "scene " << i;
  }
  EXPECT_GT(feasible, 10);
}

TEST(PlaceStack, InterfaceAtLevelBoundary) {
  auto scene = spheres(60, 50);
  scene.stack_gap = 4.0;
  const auto [top, bottom] = place_stack(scene);
  EXPECT_DOUBLE_EQ(top.pose.base_z, 32.0);
  EXPECT_DOUBLE_EQ(bottom.pose.base_z + bottom.height(), 28.0);
  EXPECT_EQ(top.pose.stack_level, 1);
  EXPECT_EQ(bottom.pose.stack_level, 0);
}

}  // namespace
}  // namespace origrip
