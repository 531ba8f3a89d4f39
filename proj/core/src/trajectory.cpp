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

#include "origrip/trajectory.hpp"

#include <cmath>
#include <functional>

#include <fmt/format.h>

#include "origrip/errors.hpp"

namespace origrip {
namespace {

class Builder {
 public:
  Builder(const PickPlaceScene& scene, Eigen::Vector2d start) : scene_(scene) {
    traj_.waypoints.push_back({lifted(start), 0.0, Action::Start});
  }

  void cycle_down(Action dwell_action, double dwell) {
    const Eigen::Vector3d here = current();
    move({here.x(), here.y(), 0.0}, scene_.descend_speed, Action::Descend);
    if (dwell > 0.0) {
      traj_.waypoints.push_back({current(), traj_.waypoints.back().time + dwell, dwell_action});
    }
    move(here, scene_.descend_speed, Action::Ascend);
  }

  void travel(const Eigen::Vector2d& to) { move(lifted(to), scene_.travel_speed, Action::Travel); }

  Trajectory take() { return std::move(traj_); }

 private:
  Eigen::Vector3d lifted(const Eigen::Vector2d& p) const {
    return {p.x(), p.y(), scene_.approach_height};
  }
  Eigen::Vector3d current() const { return traj_.waypoints.back().position; }

  void move(const Eigen::Vector3d& to, double speed, Action action) {
    const double len = (to - current()).norm();
    if (len <= 0.0) return;
    traj_.waypoints.push_back({to, traj_.waypoints.back().time + len / speed, action});
  }

  const PickPlaceScene& scene_;
  Trajectory traj_;
};

double percent_reduction(double sequential, double multi) {
  return sequential > 0.0 ? 100.0 * (1.0 - multi / sequential) : 0.0;
}

// Bisection for a monotone function crossing `target` on [lo, hi].
double solve_monotone(const std::function<double(double)>& f, double lo, double hi,
                      double target) {
  const bool rising = f(hi) > f(lo);
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    ((f(mid) < target) == rising ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

void PickPlaceScene::validate() const {
  if (!(descend_speed > 0.0) || !(travel_speed > 0.0)) throw DomainError("speeds must be > 0");
  if (!(approach_height > 0.0)) throw DomainError("approach height must be > 0");
  if (!(grasp_dwell >= 0.0) || !(release_dwell >= 0.0)) throw DomainError("dwells must be >= 0");
  for (const auto* p : {&pick, &place_bottom, &place_top}) {
    if (!p->allFinite()) throw DomainError("locations must be finite");
  }
}

std::string_view to_string(Strategy strategy) {
  return strategy == Strategy::Sequential ? "sequential" : "multi_object";
}

std::string_view to_string(Action action) {
  switch (action) {
    case Action::Start: return "start";
    case Action::Descend: return "descend";
    case Action::Ascend: return "ascend";
    case Action::Travel: return "travel";
    case Action::Grasp: return "grasp";
    case Action::Release: return "release";
  }
  return "unknown";
}

Trajectory build_trajectory(const PickPlaceScene& scene, Strategy strategy,
                            const PlanOutcome& plan) {
  scene.validate();
  Builder b(scene, scene.pick);
  if (strategy == Strategy::Sequential) {
    // The top object comes off the stack first.
    b.cycle_down(Action::Grasp, scene.grasp_dwell);
    b.travel(scene.place_top);
    b.cycle_down(Action::Release, scene.release_dwell);
    b.travel(scene.pick);
    b.cycle_down(Action::Grasp, scene.grasp_dwell);
    b.travel(scene.place_bottom);
    b.cycle_down(Action::Release, scene.release_dwell);
  } else {
    if (!plan.feasible()) {
      const auto& r = plan.infeasible;
      throw DomainError(r ? fmt::format("infeasible multi-object plan ({}): {}",
                                        to_string(r->reason), r->message)
                          : std::string("infeasible multi-object plan"));
    }
    b.cycle_down(Action::Grasp, scene.grasp_dwell);
    b.travel(scene.place_bottom);
    b.cycle_down(Action::Release, scene.release_dwell);
    b.travel(scene.place_top);
    b.cycle_down(Action::Release, scene.release_dwell);
  }
  return b.take();
}

double path_distance(const Trajectory& t) {
  double d = 0.0;
  for (std::size_t i = 1; i < t.waypoints.size(); ++i) {
    d += (t.waypoints[i].position - t.waypoints[i - 1].position).norm();
  }
  return d;
}

double process_time(const Trajectory& t) {
  return t.waypoints.empty() ? 0.0 : t.waypoints.back().time - t.waypoints.front().time;
}

Trajectory concatenate(const Trajectory& a, const Trajectory& b) {
  if (a.waypoints.empty()) return b;
  if (b.waypoints.empty()) return a;
  if ((b.waypoints.front().position - a.waypoints.back().position).norm() > 1e-9) {
    throw DomainError("trajectories to concatenate must meet end to start");
  }
  Trajectory out = a;
  const double shift = a.waypoints.back().time - b.waypoints.front().time;
  for (std::size_t i = 1; i < b.waypoints.size(); ++i) {
    Waypoint w = b.waypoints[i];
    w.time += shift;
    out.waypoints.push_back(w);
  }
  return out;
}

Comparison compare(const PickPlaceScene& scene, const PlanOutcome& plan) {
  const auto seq = build_trajectory(scene, Strategy::Sequential, plan);
  const auto multi = build_trajectory(scene, Strategy::MultiObject, plan);
  Comparison c;
  c.sequential = {path_distance(seq), process_time(seq)};
  c.multi = {path_distance(multi), process_time(multi)};
  c.distance_reduction = percent_reduction(c.sequential.distance, c.multi.distance);
  c.time_reduction = percent_reduction(c.sequential.time, c.multi.time);
  return c;
}

double eliminated_distance(const PickPlaceScene& s) {
  return 2.0 * (s.place_top - s.pick).norm() - (s.place_top - s.place_bottom).norm() +
         2.0 * s.approach_height;
}

PickPlaceScene calibrate_layout(const PickPlaceScene& base, const PlanOutcome& plan,
                                double target_distance_reduction,
                                double target_time_reduction) {
  Eigen::Vector2d dir = base.place_bottom - base.pick;
  dir = dir.norm() > 0.0 ? Eigen::Vector2d(dir.normalized()) : Eigen::Vector2d::UnitX();
  const Eigen::Vector2d offset = base.place_top - base.place_bottom;

  auto at_separation = [&](double s) {
    PickPlaceScene out = base;
    out.place_bottom = base.pick + s * dir;
    out.place_top = out.place_bottom + offset;
    return out;
  };
  auto dist_red = [&](double s) { return compare(at_separation(s), plan).distance_reduction; };

  double s_hi = 1.0;
  if (dist_red(0.0) > target_distance_reduction) {
    throw RangeError(fmt::format("distance reduction {} % at zero separation already exceeds {} %",
                                 dist_red(0.0), target_distance_reduction),
                     0.0, 0.0);
  }
  while (dist_red(s_hi) < target_distance_reduction) {
    s_hi *= 2.0;
    if (s_hi > 1e7) {
      throw RangeError(fmt::format("distance reduction {} % is unreachable by separation",
                                   target_distance_reduction),
                       dist_red(0.0), dist_red(1e7));
    }
  }
  PickPlaceScene out =
      at_separation(solve_monotone(dist_red, 0.0, s_hi, target_distance_reduction));

  auto time_red = [&](double log_v) {
    PickPlaceScene s = out;
    s.travel_speed = std::exp(log_v);
    return compare(s, plan).time_reduction;
  };
  const double lo = std::log(1e-3), hi = std::log(1e6);
  const double r_lo = time_red(lo), r_hi = time_red(hi);
  if ((target_time_reduction - r_lo) * (target_time_reduction - r_hi) > 0.0) {
    throw RangeError(fmt::format("time reduction {} % is unreachable by travel speed",
                                 target_time_reduction),
                     std::min(r_lo, r_hi), std::max(r_lo, r_hi));
  }
  out.travel_speed = std::exp(solve_monotone(time_red, lo, hi, target_time_reduction));
  return out;
}

}  // namespace origrip
