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

#ifndef ORIGRIP_GRASP_ENGINE_HPP_
#define ORIGRIP_GRASP_ENGINE_HPP_

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "origrip/module_mechanics.hpp"
#include "origrip/object_shape.hpp"
#include "origrip/transmission.hpp"

namespace origrip {

enum class GraspMode { Parallel, VEnveloping };
enum class ContactMode { Compression, Bending };

std::string_view to_string(GraspMode mode);
std::string_view to_string(ContactMode mode);

struct ContactRecord {
  int finger_index = 0;
  int level = 0;  // 0 = bottom module
  ContactMode mode = ContactMode::Compression;
  std::optional<double> penetration;  // mm, Compression only
  std::optional<double> bend_angle;   // deg, Bending only
  double normal_force = 0.0;          // N
  // Unit planar direction of the force applied to the object.
  Eigen::Vector2d normal_direction = Eigen::Vector2d::Zero();
  // Planar contact point relative to the object's vertical axis (mm).
  Eigen::Vector2d position = Eigen::Vector2d::Zero();
  // Contact height in the gripper frame (mm).
  double height = 0.0;
  // Tilt of the contact normal out of the horizontal plane (deg). Positive
  // when the module force has an upward component on the object, i.e. the
  // contact resists the object sliding down out of the grasp.
  double inclination = 0.0;
  double mu = 0.0;
  bool overcompressed = false;
  bool overfolded = false;
};

struct ContactSet {
  GraspMode mode = GraspMode::Parallel;
  int finger_count = 2;
  // Torque normalisation length for wrench analysis (mm).
  double characteristic_radius = 1.0;
  std::vector<ContactRecord> contacts;

  bool empty() const { return contacts.empty(); }
  std::size_t size() const { return contacts.size(); }
};

// Parallel for flat sides; VEnveloping when the side profile is convex with
// radius of curvature <= curvature_threshold * panel_span.
GraspMode grasp_mode(const ObjectShape& object, const GripperConfig& config);

// Geometric engagement of one module with the object, before any
// constitutive law is applied.
struct ModuleEngagement {
  int finger_index = 0;
  int level = 0;
  double azimuth = 0.0;      // deg
  double penetration = 0.0;  // mm, deepest point of the face
  double patch_lo = 0.0;     // gripper-frame heights of the contact patch
  double patch_hi = 0.0;
  double surface_radius = 0.0;  // half extent at the patch centre (mm)
};

// Every module face that overlaps the object vertically and is pushed into
// it (penetration > 0). Zero penetration yields no entry.
std::vector<ModuleEngagement> module_engagements(double theta_deg,
                                                 const ObjectShape& object,
                                                 const GripperConfig& config);

// Resolves all module contacts at servo angle theta. The object pose must
// be centred on the gripper axis.
ContactSet resolve_contacts(double theta_deg, const ObjectShape& object,
                            const GripperConfig& config,
                            const MaterialModel& material, double mu,
                            double torque_unit_scale = kDefaultTorqueUnitScale);

// Vertical force needed to pull the object out of the grasp:
// sum of mu*Fn*cos(i) + Fn*sin(i), floored at zero.
double pullout_capacity(const ContactSet& contacts);

// Share of pullout_capacity carried by one finger.
double finger_pullout_force(const ContactSet& contacts, int finger_index);

struct LiftResult {
  bool holds = false;
  double margin = 0.0;  // N, capacity - weight
};

LiftResult lift_check(const ContactSet& contacts, const ObjectShape& object,
                      double gravity, double safety);

struct TracePoint {
  double lift = 0.0;   // mm
  double force = 0.0;  // N
  int top_contacts = 0;
  int bottom_contacts = 0;
};

// Force-displacement curve of a pull-out test. Stage markers:
//   t1  full grasp (lift 0)
//   t2  last lift at which the top modules still touch the probe
//   t3  first lift at which only bottom modules hold
//   t4  first lift with no contact at all
struct PulloutTrace {
  std::vector<TracePoint> points;
  std::optional<double> t1, t2, t3, t4;
};

// Probe moves down relative to the gripper by each lift value.
PulloutTrace pullout_trace(double theta_deg, const ObjectShape& probe,
                           const GripperConfig& config,
                           const MaterialModel& material, double mu,
                           std::span<const double> lift_grid,
                           double torque_unit_scale = kDefaultTorqueUnitScale);

// Uniform grid 0, step, 2*step, ... reaching past full disengagement.
std::vector<double> pullout_lift_grid(const ObjectShape& probe,
                                      const GripperConfig& config, double step);

// Places the object so its mid-height sits on the boundary between the two
// lowest module levels.
ObjectShape centred_between_levels(ObjectShape object, const GripperConfig& config);

// Friction coefficient that makes one finger's pull-out force equal
// target_per_finger at theta. Throws RangeError when unattainable.
double calibrate_mu(double theta_deg, const ObjectShape& probe,
                    const GripperConfig& config, const MaterialModel& material,
                    double target_per_finger,
                    double torque_unit_scale = kDefaultTorqueUnitScale);

}  // namespace origrip

#endif  // ORIGRIP_GRASP_ENGINE_HPP_
