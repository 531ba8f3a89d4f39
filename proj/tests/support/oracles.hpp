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

// Independent reference implementations used to check the library.

#ifndef ORIGRIP_TESTS_ORACLES_HPP_
#define ORIGRIP_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

#include "origrip/closure.hpp"
#include "origrip/multiobject_planner.hpp"

namespace origrip::testing {

// Fibonacci lattice on the unit sphere.
inline std::vector<Wrench> sphere_directions(int n) {
  std::vector<Wrench> out;
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (int i = 0; i < n; ++i) {
    const double z = 1.0 - 2.0 * (i + 0.5) / n;
    const double r = std::sqrt(1.0 - z * z);
    out.emplace_back(r * std::cos(golden * i), r * std::sin(golden * i), z);
  }
  return out;
}

// Largest angular gap between any direction and its nearest lattice point,
// estimated by dense random probing and padded by 25 %.
inline double covering_angle(const std::vector<Wrench>& dirs) {
  std::mt19937 rng(7);
  std::normal_distribution<double> g;
  double worst = 0.0;
  for (int i = 0; i < 200000; ++i) {
    Wrench v(g(rng), g(rng), g(rng));
    v.normalize();
    double best = -1.0;
    for (const auto& d : dirs) best = std::max(best, d.dot(v));
    worst = std::max(worst, std::acos(std::clamp(best, -1.0, 1.0)));
  }
  return 1.25 * worst;
}

enum class OracleVerdict { Open, Closed, Uncertain };

// Origin is strictly inside the hull iff every direction has positive
// support. A sampled direction with non-positive support proves the hull
// open; positive support beyond the sampling error everywhere proves it
// closed. Anything in between is left undecided.
struct ClosureOracle {
  std::vector<Wrench> dirs = sphere_directions(360);
  double alpha = covering_angle(dirs);

  OracleVerdict operator()(const std::vector<Wrench>& w) const {
    double radius = 0.0;
    for (const auto& p : w) radius = std::max(radius, p.norm());
    if (radius == 0.0) return OracleVerdict::Open;
    double min_support = std::numeric_limits<double>::infinity();
    for (const auto& d : dirs) {
      double h = -std::numeric_limits<double>::infinity();
      for (const auto& p : w) h = std::max(h, d.dot(p));
      if (h <= 1e-12 * radius) return OracleVerdict::Open;
      min_support = std::min(min_support, h);
    }
    const double slack = 2.0 * std::sin(0.5 * alpha) * radius;
    return min_support > slack ? OracleVerdict::Closed : OracleVerdict::Uncertain;
  }
};

// Contact set with contacts on a circle, inward normals tilted randomly.
inline ContactSet random_contact_set(std::mt19937& rng) {
  std::uniform_int_distribution<int> count(2, 8);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  ContactSet set;
  set.mode = GraspMode::Parallel;
  set.characteristic_radius = 30.0;
  const int n = count(rng);
  const double mu = 0.8 * u(rng);
  for (int i = 0; i < n; ++i) {
    ContactRecord c;
    const double a = 2.0 * std::numbers::pi * u(rng);
    const double tilt = (u(rng) - 0.5) * std::numbers::pi * 0.8;
    c.position = 30.0 * Eigen::Vector2d(std::cos(a), std::sin(a));
    c.normal_direction = -Eigen::Vector2d(std::cos(a + tilt), std::sin(a + tilt));
    c.normal_force = 0.1 + 5.0 * u(rng);
    c.mu = mu;
    c.penetration = 1.0;
    set.contacts.push_back(c);
  }
  return set;
}

// Hold predicate evaluated from first principles: penetration found by
// sampling the object's surface over each face, then the strain rule and a
// lift check on the resolved contacts.
inline bool oracle_holds(double theta, const ObjectShape& o, const HoldContext& ctx) {
  const auto& g = ctx.gripper;
  const double face = 0.5 * opening(theta, g);
  bool engaged = false;
  for (int k = 0; k < g.finger_count; ++k) {
    const double az = 360.0 * k / g.finger_count;
    for (double level : g.module_levels) {
      const double lo = std::max(level - 0.5 * g.face_span, o.pose.base_z);
      const double hi = std::min(level + 0.5 * g.face_span, o.pose.base_z + o.height());
      if (hi - lo <= 1e-9) continue;
      double reach = 0.0;
      for (int i = 0; i <= 2000; ++i) {
        const double z = lo + (hi - lo) * i / 2000.0;
        reach = std::max(reach, o.half_extent(az, z - o.pose.base_z));
      }
      const double pen = reach - face;
      if (pen <= 0.0) continue;
      engaged = true;
      const double strain = pen / g.rest_depth;
      if (strain < ctx.material.strain_lo - 1e-9 || strain > ctx.material.strain_hi + 1e-9) {
        return false;
      }
    }
  }
  if (!engaged) return false;
  const auto contacts = resolve_contacts(theta, o, g, ctx.material, ctx.mu, ctx.torque_unit_scale);
  return pullout_capacity(contacts) >= ctx.safety * o.mass * ctx.gravity;
}

struct SweepWindow {
  bool empty = true;
  double lo = 0.0;
  double hi = 0.0;
};

// Longest run of the hold predicate on a 0.1 deg grid.
inline SweepWindow sweep_window(const ObjectShape& o, const HoldContext& ctx) {
  const auto& law = ctx.gripper.law;
  const int n = static_cast<int>(std::lround((law.theta_max - law.theta_min) / 0.1));
  SweepWindow best;
  int run = -1;
  int best_len = -1;
  for (int i = 0; i <= n + 1; ++i) {
    const bool ok = i <= n && oracle_holds(law.theta_min + 0.1 * i, o, ctx);
    if (ok && run < 0) run = i;
    if (!ok && run >= 0) {
      if (i - 1 - run > best_len) {
        best_len = i - 1 - run;
        best = {false, law.theta_min + 0.1 * run, law.theta_min + 0.1 * (i - 1)};
      }
      run = -1;
    }
  }
  return best;
}

inline ObjectShape random_shape(std::mt19937& rng, double width, const char* name) {
  std::uniform_int_distribution<int> kind(0, 3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double mass = 0.08 * u(rng);
  ObjectShape o;
  switch (kind(rng)) {
    case 0: o = ObjectShape::sphere(width, mass); break;
    case 1: o = ObjectShape::cube(width, mass); break;
    case 2: o = ObjectShape::cuboid(width, 30.0 + 20.0 * u(rng), 30.0 + 30.0 * u(rng), mass); break;
    default: o = ObjectShape::cylinder(width, 30.0 + 30.0 * u(rng), mass); break;
  }
  o.name = name;
  return o;
}

inline StackedScene random_stacked_scene(std::mt19937& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  StackedScene s;
  const double top = 48.0 + 24.0 * u(rng);
  const double bottom = 36.0 + (top - 38.0) * u(rng);
  s.top = random_shape(rng, top, "top");
  s.bottom = random_shape(rng, bottom, "bottom");
  s.gripper.finger_count = u(rng) < 0.5 ? 2 : 4;
  s.material = u(rng) < 0.5 ? tpu95a() : sil950();
  s.mu = 0.2 + 0.6 * u(rng);
  return s;
}

}  // namespace origrip::testing

#endif  // ORIGRIP_TESTS_ORACLES_HPP_
