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

#ifndef ORIGRIP_MODULE_MECHANICS_HPP_
#define ORIGRIP_MODULE_MECHANICS_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace origrip {

// Torques in material tables are read as N*mm. Multiply by this scale to
// obtain N*mm when a table uses another unit.
inline constexpr double kDefaultTorqueUnitScale = 1.0;

// Constitutive description of one origami module. Both curves are
// piecewise linear: a loading ramp from zero to the plateau, a flat plateau
// over the effective range, and a post-range regime.
struct MaterialModel {
  std::string name;
  double plateau_force = 1.0;       // N
  double force_band = 0.0;          // fractional half-width
  double strain_lo = 0.1;
  double strain_hi = 0.5;
  double plateau_torque = 1.0;      // N*mm (after unit scaling)
  double torque_band = 0.0;         // fractional half-width
  double angle_lo = 5.0;            // deg
  double angle_hi = 25.0;           // deg
  double overload_stiffness = 0.0;  // N per unit strain beyond strain_hi

  void validate() const;

  bool operator==(const MaterialModel&) const = default;
};

// 10x the mean slope of the compression loading ramp.
double default_overload_stiffness(double plateau_force, double strain_lo);

MaterialModel tpu95a();
MaterialModel sil950();
std::vector<MaterialModel> builtin_materials();

struct ForceSample {
  double force = 0.0;
  bool overcompressed = false;  // strain > 1
};

struct TorqueSample {
  double torque = 0.0;
  bool overfolded = false;  // angle > angle_hi
};

double effective_strain(double penetration_mm, double rest_depth_mm);

ForceSample compression_force(double strain, const MaterialModel& material);

TorqueSample bending_torque(double angle_deg, const MaterialModel& material);

// Contact force produced by a bent module acting through lever_arm.
double bending_contact_force(double angle_deg, double lever_arm_mm,
                             const MaterialModel& material,
                             double torque_unit_scale = kDefaultTorqueUnitScale);

// Returns a copy whose plateau force and torque are scaled by factors drawn
// uniformly inside the material's deviation bands. Deterministic in seed.
MaterialModel perturb_within_band(const MaterialModel& material, std::uint64_t seed);

}  // namespace origrip

#endif  // ORIGRIP_MODULE_MECHANICS_HPP_
