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

#ifndef ORIGRIP_TRANSMISSION_HPP_
#define ORIGRIP_TRANSMISSION_HPP_

#include <vector>

namespace origrip {

// Spiral guide on the transmission disk. The guide pin radius falls
// linearly with servo angle: r(theta) = r0 - slope * theta.
struct TransmissionLaw {
  double r0 = 54.0;               // mm
  double slope = 25.0 / 90.0;     // mm per degree
  double theta_min = 0.0;         // deg
  double theta_max = 90.0;        // deg

  // Throws DomainError if slope <= 0 or theta_min >= theta_max.
  void validate() const;

  bool operator==(const TransmissionLaw&) const = default;
};

// Geometry of the multi-finger gripper. Heights are measured upward from
// the lower edge of the bottom module face, in the gripper frame.
struct GripperConfig {
  int finger_count = 2;
  TransmissionLaw law{};
  // Guide pin to module contact face (mm).
  double module_offset = 15.0;
  // Face-centre heights of the module levels, bottom first (mm).
  std::vector<double> module_levels{15.0, 45.0};
  // Vertical extent of each module contact face (mm).
  double face_span = 30.0;
  // Panel envelope of a finger's module column, used for grasp-mode
  // classification (mm).
  double panel_span = 60.0;
  // Undeformed module thickness; effective strain = penetration / rest_depth.
  double rest_depth = 15.0;
  // Surfaces with radius of curvature <= curvature_threshold * panel_span
  // are enveloped rather than squeezed.
  double curvature_threshold = 1.0;
  // Lever arm converting module bending torque into a contact force (mm).
  double lever_arm = 15.0;

  // Throws DomainError naming the first violated invariant.
  void validate() const;

  bool operator==(const GripperConfig&) const = default;
};

// Guide radius at servo angle theta (deg). Throws DomainError outside
// [law.theta_min, law.theta_max].
double finger_radius(double theta_deg, const TransmissionLaw& law);

// Face-to-face distance between opposing modules (mm).
double opening(double theta_deg, const GripperConfig& config);

// Inverse of opening(). Throws RangeError when target is not achievable.
double theta_for_opening(double target_mm, const GripperConfig& config);

// Narrowest and widest openings the law can reach.
inline double opening_min(const GripperConfig& c) { return opening(c.law.theta_max, c); }
inline double opening_max(const GripperConfig& c) { return opening(c.law.theta_min, c); }

}  // namespace origrip

#endif  // ORIGRIP_TRANSMISSION_HPP_
