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

#include "origrip/grasp_engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <fmt/format.h>

#include "origrip/errors.hpp"

namespace origrip {
namespace {

constexpr double kDeg = std::numbers::pi / 180.0;
constexpr double kOverlapEps = 1e-9;

double finger_azimuth(int k, int n) { return 360.0 * k / n; }

// Half-chord of the arc profile above the face plane at distance `face`
// from the axis; 0 when the arc does not reach past the face.
double patch_half_chord(const ObjectShape& o, double face) {
  const double r = o.profile_radius();
  const double half = 0.5 * (o.kind == ShapeKind::Sphere ? o.dims[0] : o.dims[1]);
  const double q = face - half + r;
  if (q <= 0.0) return r;
  if (q >= r) return 0.0;
  return std::sqrt(r * r - q * q);
}

}  // namespace

std::string_view to_string(GraspMode mode) {
  return mode == GraspMode::Parallel ? "parallel" : "v_enveloping";
}

std::string_view to_string(ContactMode mode) {
  return mode == ContactMode::Compression ? "compression" : "bending";
}

GraspMode grasp_mode(const ObjectShape& object, const GripperConfig& config) {
  const double r = object.profile_radius();
  return r <= config.curvature_threshold * config.panel_span ? GraspMode::VEnveloping
                                                              : GraspMode::Parallel;
}

std::vector<ModuleEngagement> module_engagements(double theta_deg, const ObjectShape& object,
                                                 const GripperConfig& config) {
  const double face = 0.5 * opening(theta_deg, config);
  const double base = object.pose.base_z;
  const double top = base + object.height();
  const double half_span = 0.5 * config.face_span;

  std::vector<ModuleEngagement> out;
  for (int k = 0; k < config.finger_count; ++k) {
    const double az = finger_azimuth(k, config.finger_count);
    for (std::size_t l = 0; l < config.module_levels.size(); ++l) {
      const double lo = std::max(config.module_levels[l] - half_span, base);
      const double hi = std::min(config.module_levels[l] + half_span, top);
      if (hi - lo <= kOverlapEps) continue;

      ModuleEngagement e;
      e.finger_index = k;
      e.level = static_cast<int>(l);
      e.azimuth = az;
      if (object.has_curved_profile()) {
        const double zc = base + object.widest_height();
        const double zmax = std::clamp(zc, lo, hi);
        e.penetration = object.half_extent(az, zmax - base) - face;
        if (e.penetration <= 0.0) continue;
        const double c = patch_half_chord(object, face);
        e.patch_lo = std::max(lo, zc - c);
        e.patch_hi = std::min(hi, zc + c);
        if (e.patch_hi < e.patch_lo) e.patch_lo = e.patch_hi = zmax;
      } else {
        e.penetration = object.half_extent(az, 0.5 * (lo + hi) - base) - face;
        if (e.penetration <= 0.0) continue;
        e.patch_lo = lo;
        e.patch_hi = hi;
      }
      e.surface_radius = object.half_extent(az, 0.5 * (e.patch_lo + e.patch_hi) - base);
      out.push_back(e);
    }
  }
  return out;
}

ContactSet resolve_contacts(double theta_deg, const ObjectShape& object,
                            const GripperConfig& config, const MaterialModel& material,
                            double mu, double torque_unit_scale) {
  if (!(mu >= 0.0)) throw DomainError(fmt::format("friction coefficient must be >= 0, got {}", mu));
  ContactSet set;
  set.mode = grasp_mode(object, config);
  set.finger_count = config.finger_count;
  set.characteristic_radius = object.bounding_radius();

  for (const auto& e : module_engagements(theta_deg, object, config)) {
    ContactRecord c;
    c.finger_index = e.finger_index;
    c.level = e.level;
    c.mu = mu;
    const double a = e.azimuth * kDeg;
    const Eigen::Vector2d out_dir(std::cos(a), std::sin(a));
    c.normal_direction = -out_dir;
    c.position = e.surface_radius * out_dir;
    c.height = 0.5 * (e.patch_lo + e.patch_hi);
    c.overcompressed = e.penetration > config.rest_depth;

    if (set.mode == GraspMode::Parallel) {
      c.mode = ContactMode::Compression;
      c.penetration = e.penetration;
      const auto s = compression_force(effective_strain(e.penetration, config.rest_depth), material);
      c.normal_force = s.force;
      c.overcompressed = s.overcompressed;
    } else {
      c.mode = ContactMode::Bending;
      const double elevation = object.normal_elevation(c.height - object.pose.base_z);
      const double bend = std::abs(elevation);
      c.bend_angle = bend;
      c.inclination = -elevation;
      c.normal_force = bending_contact_force(bend, config.lever_arm, material, torque_unit_scale);
      c.overfolded = bending_torque(bend, material).overfolded;
    }
    set.contacts.push_back(c);
  }
  return set;
}

namespace {

double contact_lift(const ContactRecord& c) {
  const double i = c.inclination * kDeg;
  return c.normal_force * (c.mu * std::cos(i) + std::sin(i));
}

}  // namespace

double pullout_capacity(const ContactSet& contacts) {
  double sum = 0.0;
  for (const auto& c : contacts.contacts) sum += contact_lift(c);
  return std::max(0.0, sum);
}

double finger_pullout_force(const ContactSet& contacts, int finger_index) {
  double sum = 0.0;
  for (const auto& c : contacts.contacts) {
    if (c.finger_index == finger_index) sum += contact_lift(c);
  }
  return std::max(0.0, sum);
}

LiftResult lift_check(const ContactSet& contacts, const ObjectShape& object, double gravity,
                      double safety) {
  if (!(safety > 0.0)) throw DomainError("safety factor must be > 0");
  const double capacity = pullout_capacity(contacts);
  const double weight = object.mass * gravity;
  return {!contacts.empty() && capacity >= safety * weight, capacity - weight};
}

PulloutTrace pullout_trace(double theta_deg, const ObjectShape& probe, const GripperConfig& config,
                           const MaterialModel& material, double mu,
                           std::span<const double> lift_grid, double torque_unit_scale) {
  if (lift_grid.empty()) throw DomainError("lift grid is empty");
  if (!std::is_sorted(lift_grid.begin(), lift_grid.end())) {
    throw DomainError("lift grid must be non-decreasing");
  }
  const int top_level = static_cast<int>(config.module_levels.size()) - 1;
  PulloutTrace trace;
  trace.points.reserve(lift_grid.size());
  bool seen_contact = false;
  for (double lift : lift_grid) {
    ObjectShape moved = probe;
    moved.pose.base_z -= lift;
    const auto set = resolve_contacts(theta_deg, moved, config, material, mu, torque_unit_scale);
    TracePoint p;
    p.lift = lift;
    p.force = pullout_capacity(set);
    for (const auto& c : set.contacts) {
      if (c.level == top_level) ++p.top_contacts;
      if (c.level == 0) ++p.bottom_contacts;
    }
    // With a single level the top and bottom rows coincide.
    if (top_level == 0) p.top_contacts = 0;

    if (!set.empty()) {
      if (!seen_contact) trace.t1 = lift;
      seen_contact = true;
      if (p.top_contacts > 0 && !trace.t3) trace.t2 = lift;
      if (p.top_contacts == 0 && p.bottom_contacts > 0 && !trace.t3) trace.t3 = lift;
    } else if (seen_contact && !trace.t4) {
      trace.t4 = lift;
    }
    trace.points.push_back(p);
  }
  return trace;
}

std::vector<double> pullout_lift_grid(const ObjectShape& probe, const GripperConfig& config,
                                      double step) {
  if (!(step > 0.0)) throw DomainError("lift step must be > 0");
  const double lowest = config.module_levels.front() - 0.5 * config.face_span;
  const double end = probe.pose.base_z + probe.height() - lowest + step;
  const auto n = static_cast<std::size_t>(std::ceil(end / step - 1e-9)) + 1;
  std::vector<double> grid(n);
  for (std::size_t i = 0; i < n; ++i) grid[i] = step * static_cast<double>(i);
  return grid;
}

ObjectShape centred_between_levels(ObjectShape object, const GripperConfig& config) {
  const auto& lv = config.module_levels;
  const double boundary = lv.size() >= 2 ? 0.5 * (lv[0] + lv[1]) : lv.front();
  object.pose.base_z = boundary - object.widest_height();
  return object;
}

double calibrate_mu(double theta_deg, const ObjectShape& probe, const GripperConfig& config,
                    const MaterialModel& material, double target_per_finger,
                    double torque_unit_scale) {
  const auto set = resolve_contacts(theta_deg, probe, config, material, 0.0, torque_unit_scale);
  double friction = 0.0, wedge = 0.0;
  for (const auto& c : set.contacts) {
    if (c.finger_index != 0) continue;
    const double i = c.inclination * kDeg;
    friction += c.normal_force * std::cos(i);
    wedge += c.normal_force * std::sin(i);
  }
  if (friction <= 0.0) {
    throw RangeError("probe makes no load-bearing contact at this angle", 0.0, 0.0);
  }
  const double mu = (target_per_finger - wedge) / friction;
  if (mu < 0.0) {
    throw RangeError(fmt::format("target {} N is below the frictionless capacity {} N",
                                 target_per_finger, wedge),
                     wedge, std::numeric_limits<double>::infinity());
  }
  return mu;
}

}  // namespace origrip
