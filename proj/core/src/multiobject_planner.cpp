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

#include "origrip/multiobject_planner.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include <fmt/format.h>

#include "origrip/errors.hpp"

namespace origrip {
namespace {

constexpr double kStrainTol = 1e-9;

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  double length() const { return hi - lo; }
};

// Deepest reach of each module face that vertically overlaps the object,
// i.e. the half extent the face meets at its deepest point. Independent of
// the actuation angle.
std::vector<double> module_reaches(const ObjectShape& o, const GripperConfig& g) {
  std::vector<double> out;
  const double base = o.pose.base_z;
  const double top = base + o.height();
  for (int k = 0; k < g.finger_count; ++k) {
    const double az = 360.0 * k / g.finger_count;
    for (double level : g.module_levels) {
      const double lo = std::max(level - 0.5 * g.face_span, base);
      const double hi = std::min(level + 0.5 * g.face_span, top);
      if (hi - lo <= 1e-9) continue;
      const double z = o.has_curved_profile() ? std::clamp(base + o.widest_height(), lo, hi)
                                              : 0.5 * (lo + hi);
      out.push_back(o.half_extent(az, z - base));
    }
  }
  return out;
}

bool strain_ok_at_face(double face, const std::vector<double>& reaches, double rest,
                       const MaterialModel& m) {
  bool engaged = false;
  for (double r : reaches) {
    if (r <= face) continue;
    engaged = true;
    const double s = (r - face) / rest;
    if (s < m.strain_lo - kStrainTol || s > m.strain_hi + kStrainTol) return false;
  }
  return engaged;
}

// Longest run of face positions (half openings) satisfying the strain
// condition inside [fmin, fmax].
std::optional<Interval> strain_face_interval(const std::vector<double>& reaches,
                                             const HoldContext& ctx, double fmin, double fmax) {
  const double rest = ctx.gripper.rest_depth;
  std::vector<double> pts{fmin, fmax};
  for (double r : reaches) {
    for (double p : {r - ctx.material.strain_hi * rest, r - ctx.material.strain_lo * rest, r}) {
      if (p > fmin && p < fmax) pts.push_back(p);
    }
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  std::optional<Interval> best, cur;
  auto close_run = [&] {
    if (cur && (!best || cur->length() > best->length())) best = cur;
    cur.reset();
  };
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const bool point_ok = strain_ok_at_face(pts[i], reaches, rest, ctx.material);
    if (point_ok) {
      if (!cur) cur = Interval{pts[i], pts[i]};
      cur->hi = pts[i];
    } else {
      close_run();
    }
    if (i + 1 < pts.size()) {
      const double mid = 0.5 * (pts[i] + pts[i + 1]);
      if (strain_ok_at_face(mid, reaches, rest, ctx.material)) {
        if (!cur) cur = Interval{pts[i], pts[i]};
        cur->hi = pts[i + 1];
      } else {
        close_run();
      }
    }
  }
  close_run();
  return best;
}

double bisect_boundary(double pass, double fail, const ObjectShape& o, const HoldContext& ctx) {
  for (int i = 0; i < 60; ++i) {
    const double mid = 0.5 * (pass + fail);
    (holds_at(mid, o, ctx) ? pass : fail) = mid;
  }
  return pass;
}

}  // namespace

std::string_view to_string(LimitingFactor factor) {
  switch (factor) {
    case LimitingFactor::StrainRange: return "strain_range";
    case LimitingFactor::LiftCapacity: return "lift_capacity";
    case LimitingFactor::OpeningRange: return "opening_range";
  }
  return "unknown";
}

std::string_view to_string(Infeasibility reason) {
  switch (reason) {
    case Infeasibility::SizeOrdering: return "size_ordering";
    case Infeasibility::TopWindowEmpty: return "top_window_empty";
    case Infeasibility::BottomWindowEmpty: return "bottom_window_empty";
    case Infeasibility::EmptyGraspIntersection: return "empty_grasp_intersection";
    case Infeasibility::EmptyReleaseGap: return "empty_release_gap";
    case Infeasibility::TopReleaseUnreachable: return "top_release_unreachable";
  }
  return "unknown";
}

HoldContext HoldContext::from(const StackedScene& s) {
  return HoldContext{s.gripper, s.material, s.mu, s.gravity, s.safety, s.torque_unit_scale};
}

bool holds_at(double theta_deg, const ObjectShape& placed, const HoldContext& ctx) {
  const auto eng = module_engagements(theta_deg, placed, ctx.gripper);
  if (eng.empty()) return false;
  for (const auto& e : eng) {
    const double s = effective_strain(e.penetration, ctx.gripper.rest_depth);
    if (s < ctx.material.strain_lo - kStrainTol || s > ctx.material.strain_hi + kStrainTol) {
      return false;
    }
  }
  const auto contacts = resolve_contacts(theta_deg, placed, ctx.gripper, ctx.material, ctx.mu,
                                         ctx.torque_unit_scale);
  return lift_check(contacts, placed, ctx.gravity, ctx.safety).holds;
}

std::optional<HoldWindow> hold_window(const ObjectShape& placed, const HoldContext& ctx) {
  const auto reaches = module_reaches(placed, ctx.gripper);
  if (reaches.empty()) return std::nullopt;

  const double fmin = 0.5 * opening_min(ctx.gripper);
  const double fmax = 0.5 * opening_max(ctx.gripper);
  const auto faces = strain_face_interval(reaches, ctx, fmin, fmax);
  if (!faces) return std::nullopt;

  HoldWindow w;
  w.theta_lo = theta_for_opening(2.0 * faces->hi, ctx.gripper);
  w.theta_hi = theta_for_opening(2.0 * faces->lo, ctx.gripper);
  const auto strain_bound = [&](double f) {
    return std::any_of(reaches.begin(), reaches.end(), [&](double r) {
      const double rest = ctx.gripper.rest_depth;
      return std::abs(f - (r - ctx.material.strain_hi * rest)) < 1e-12 ||
             std::abs(f - (r - ctx.material.strain_lo * rest)) < 1e-12;
    });
  };
  if ((faces->lo == fmin && !strain_bound(fmin)) || (faces->hi == fmax && !strain_bound(fmax))) {
    w.limiting_factor = LimitingFactor::OpeningRange;
  }

  // Trim to where the grasp also carries the object's weight.
  const double span = w.theta_hi - w.theta_lo;
  const int n = std::max(400, static_cast<int>(std::ceil(span / 0.01)));
  std::vector<char> ok(static_cast<std::size_t>(n) + 1);
  auto theta_at = [&](int i) { return i == n ? w.theta_hi : w.theta_lo + span * i / n; };
  for (int i = 0; i <= n; ++i) ok[static_cast<std::size_t>(i)] = holds_at(theta_at(i), placed, ctx);

  int best_lo = -1, best_hi = -2, run_lo = -1;
  for (int i = 0; i <= n + 1; ++i) {
    const bool pass = i <= n && ok[static_cast<std::size_t>(i)];
    if (pass && run_lo < 0) run_lo = i;
    if (!pass && run_lo >= 0) {
      if (i - 1 - run_lo > best_hi - best_lo) {
        best_lo = run_lo;
        best_hi = i - 1;
      }
      run_lo = -1;
    }
  }
  if (best_lo < 0) return std::nullopt;
  if (best_lo == 0 && best_hi == n) return w;

  HoldWindow trimmed = w;
  trimmed.limiting_factor = LimitingFactor::LiftCapacity;
  if (best_lo > 0) {
    trimmed.theta_lo = bisect_boundary(theta_at(best_lo), theta_at(best_lo - 1), placed, ctx);
  }
  if (best_hi < n) {
    trimmed.theta_hi = bisect_boundary(theta_at(best_hi), theta_at(best_hi + 1), placed, ctx);
  }
  return trimmed;
}

std::pair<ObjectShape, ObjectShape> place_stack(const StackedScene& scene) {
  const auto& lv = scene.gripper.module_levels;
  if (lv.size() < 2) throw DomainError("stacked grasps need at least two module levels");
  if (!(scene.stack_gap >= 0.0)) throw DomainError("stack gap must be >= 0");
  const double boundary = 0.5 * (lv[0] + lv[1]);
  ObjectShape top = scene.top;
  ObjectShape bottom = scene.bottom;
  bottom.pose.base_z = boundary - 0.5 * scene.stack_gap - bottom.height();
  bottom.pose.stack_level = 0;
  top.pose.base_z = boundary + 0.5 * scene.stack_gap;
  top.pose.stack_level = 1;
  return {top, bottom};
}

PlanOutcome plan_stacked(const StackedScene& scene) {
  scene.gripper.validate();
  scene.material.validate();
  scene.top.validate();
  scene.bottom.validate();

  PlanOutcome out;
  auto fail = [&](Infeasibility why, std::string msg) {
    out.infeasible = InfeasibilityReport{why, std::move(msg)};
    return out;
  };

  const double wt = scene.top.grasp_width();
  const double wb = scene.bottom.grasp_width();
  if (wb > wt) {
    return fail(Infeasibility::SizeOrdering,
                fmt::format("bottom object ({} mm) is wider than the top object ({} mm); the "
                            "smaller object must sit at the bottom",
                            wb, wt));
  }

  const auto [top, bottom] = place_stack(scene);
  const auto ctx = HoldContext::from(scene);
  out.top_window = hold_window(top, ctx);
  out.bottom_window = hold_window(bottom, ctx);
  if (!out.top_window) {
    return fail(Infeasibility::TopWindowEmpty,
                fmt::format("no actuation angle holds the top object '{}'", top.name));
  }
  if (!out.bottom_window) {
    return fail(Infeasibility::BottomWindowEmpty,
                fmt::format("no actuation angle holds the bottom object '{}'", bottom.name));
  }
  const auto& t = *out.top_window;
  const auto& b = *out.bottom_window;

  const double lo = std::max(t.theta_lo, b.theta_lo);
  const double hi = std::min(t.theta_hi, b.theta_hi);
  if (lo > hi) {
    return fail(Infeasibility::EmptyGraspIntersection,
                fmt::format("hold windows [{}, {}] and [{}, {}] deg do not overlap", t.theta_lo,
                            t.theta_hi, b.theta_lo, b.theta_hi));
  }
  if (!(t.theta_lo < b.theta_lo)) {
    return fail(Infeasibility::EmptyReleaseGap,
                fmt::format("no angle holds the top object while releasing the bottom one "
                            "(top window starts at {} deg, bottom at {} deg)",
                            t.theta_lo, b.theta_lo));
  }

  Plan plan;
  plan.theta_grasp = 0.5 * (lo + hi);
  plan.theta_release_bottom = 0.5 * (t.theta_lo + b.theta_lo);
  plan.theta_release_top = scene.gripper.law.theta_min;
  if (holds_at(plan.theta_release_top, top, ctx)) {
    return fail(Infeasibility::TopReleaseUnreachable,
                fmt::format("the top object is still held at the widest opening ({} deg)",
                            plan.theta_release_top));
  }
  out.plan = plan;
  return out;
}

SimulationResult simulate_plan(const Plan& plan, const StackedScene& scene) {
  const auto [top, bottom] = place_stack(scene);
  const auto ctx = HoldContext::from(scene);
  SimulationResult r;
  r.stage_theta = {plan.theta_grasp, plan.theta_release_bottom, plan.theta_release_top};
  for (std::size_t i = 0; i < 3; ++i) {
    r.timeline[i] = StageState{holds_at(r.stage_theta[i], top, ctx),
                               holds_at(r.stage_theta[i], bottom, ctx)};
    if (!r.failed_stage && r.timeline[i] != kExpectedTimeline[i]) {
      r.failed_stage = static_cast<int>(i) + 1;
    }
  }
  r.passed = !r.failed_stage;
  return r;
}

}  // namespace origrip
