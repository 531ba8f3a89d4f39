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

#include "origrip/module_mechanics.hpp"

#include <random>

#include <fmt/format.h>

#include "origrip/errors.hpp"

namespace origrip {

void MaterialModel::validate() const {
  if (!(strain_lo > 0.0 && strain_lo < strain_hi)) {
    throw DomainError(fmt::format("material {}: need 0 < strain_lo < strain_hi", name));
  }
  if (!(angle_lo > 0.0 && angle_lo < angle_hi)) {
    throw DomainError(fmt::format("material {}: need 0 < angle_lo < angle_hi", name));
  }
  if (!(plateau_force > 0.0)) throw DomainError(fmt::format("material {}: plateau_force must be > 0", name));
  if (!(plateau_torque > 0.0)) throw DomainError(fmt::format("material {}: plateau_torque must be > 0", name));
  if (!(force_band >= 0.0 && force_band <= 0.2)) {
    throw DomainError(fmt::format("material {}: force_band must lie in [0, 0.2]", name));
  }
  if (!(torque_band >= 0.0 && torque_band <= 0.2)) {
    throw DomainError(fmt::format("material {}: torque_band must lie in [0, 0.2]", name));
  }
  if (!(overload_stiffness >= 0.0)) {
    throw DomainError(fmt::format("material {}: overload_stiffness must be >= 0", name));
  }
}

double default_overload_stiffness(double plateau_force, double strain_lo) {
  return 10.0 * plateau_force / strain_lo;
}

MaterialModel tpu95a() {
  MaterialModel m;
  m.name = "TPU95A";
  m.plateau_force = 4.75;
  m.force_band = 0.25 / 4.75;  // [4.5, 5.0] N
  m.plateau_torque = 39.0;
  m.torque_band = 0.05;
  m.overload_stiffness = default_overload_stiffness(m.plateau_force, m.strain_lo);
  return m;
}

MaterialModel sil950() {
  MaterialModel m;
  m.name = "SIL950";
  m.plateau_force = 1.0;
  m.force_band = 0.03;
  m.plateau_torque = 9.5;
  m.torque_band = 0.03;
  m.overload_stiffness = default_overload_stiffness(m.plateau_force, m.strain_lo);
  return m;
}

std::vector<MaterialModel> builtin_materials() { return {tpu95a(), sil950()}; }

double effective_strain(double penetration_mm, double rest_depth_mm) {
  if (!(rest_depth_mm > 0.0)) throw DomainError("rest_depth must be > 0");
  if (!(penetration_mm >= 0.0)) {
    throw DomainError(fmt::format("penetration must be >= 0, got {} mm", penetration_mm));
  }
  return penetration_mm / rest_depth_mm;
}

ForceSample compression_force(double strain, const MaterialModel& material) {
  if (!(strain >= 0.0)) throw DomainError(fmt::format("strain must be >= 0, got {}", strain));
  ForceSample out;
  if (strain < material.strain_lo) {
    out.force = material.plateau_force * strain / material.strain_lo;
  } else if (strain <= material.strain_hi) {
    out.force = material.plateau_force;
  } else {
    out.force = material.plateau_force + material.overload_stiffness * (strain - material.strain_hi);
  }
  out.overcompressed = strain > 1.0;
  return out;
}

TorqueSample bending_torque(double angle_deg, const MaterialModel& material) {
  if (!(angle_deg >= 0.0)) {
    throw DomainError(fmt::format("bend angle must be >= 0, got {} deg", angle_deg));
  }
  TorqueSample out;
  if (angle_deg < material.angle_lo) {
    out.torque = material.plateau_torque * angle_deg / material.angle_lo;
  } else {
    // Past angle_hi the module overfolds; the plateau is held.
    out.torque = material.plateau_torque;
  }
  out.overfolded = angle_deg > material.angle_hi;
  return out;
}

double bending_contact_force(double angle_deg, double lever_arm_mm,
                             const MaterialModel& material, double torque_unit_scale) {
  if (!(lever_arm_mm > 0.0)) {
    throw DomainError(fmt::format("lever arm must be > 0, got {} mm", lever_arm_mm));
  }
  return bending_torque(angle_deg, material).torque * torque_unit_scale / lever_arm_mm;
}

MaterialModel perturb_within_band(const MaterialModel& material, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  MaterialModel out = material;
  const double force_scale = 1.0 + material.force_band * unit(rng);
  const double torque_scale = 1.0 + material.torque_band * unit(rng);
  out.plateau_force *= force_scale;
  out.overload_stiffness *= force_scale;
  out.plateau_torque *= torque_scale;
  return out;
}

}  // namespace origrip
