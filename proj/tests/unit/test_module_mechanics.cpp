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

#include "origrip/errors.hpp"
#include "origrip/module_mechanics.hpp"

namespace origrip {
namespace {

TEST(ModuleMechanics, EffectiveStrain) {
  EXPECT_EQ(effective_strain(0.0, 15.0), 0.0);
  EXPECT_DOUBLE_EQ(effective_strain(7.5, 15.0), 0.5);
  EXPECT_DOUBLE_EQ(effective_strain(1.5, 15.0), 0.1);
  EXPECT_THROW(effective_strain(-0.1, 15.0), DomainError);
  EXPECT_THROW(effective_strain(1.0, 0.0), DomainError);
}

TEST(ModuleMechanics, CompressionPlateaus) {
  EXPECT_EQ(compression_force(0.3, sil950()).force, 1.0);
  const double tpu = compression_force(0.3, tpu95a()).force;
  EXPECT_EQ(tpu, 4.75);
  EXPECT_GE(tpu, 4.5);
  EXPECT_LE(tpu, 5.0);
  EXPECT_EQ(compression_force(0.0, tpu95a()).force, 0.0);
  EXPECT_EQ(compression_force(0.0, sil950()).force, 0.0);
}

TEST(ModuleMechanics, CompressionRampAndOverload) {
  const auto m = tpu95a();
  EXPECT_DOUBLE_EQ(compression_force(0.05, m).force, 2.375);
  // Overload slope is ten times the mean ramp slope: 10 * 4.75 / 0.1.
  EXPECT_DOUBLE_EQ(m.overload_stiffness, 475.0);
  EXPECT_DOUBLE_EQ(compression_force(0.6, m).force, 4.75 + 47.5);
  EXPECT_FALSE(compression_force(1.0, m).overcompressed);
  EXPECT_TRUE(compression_force(1.01, m).overcompressed);
  EXPECT_THROW(compression_force(-0.01, m), DomainError);
}

TEST(ModuleMechanics, BendingPlateausAndFlags) {
  const double tpu = bending_torque(15.0, tpu95a()).torque;
  EXPECT_EQ(tpu, 39.0);
  EXPECT_NEAR(tpu, 39.0, 0.05 * 39.0);
  EXPECT_NEAR(bending_torque(15.0, sil950()).torque, 9.5, 0.03 * 9.5);
  EXPECT_EQ(bending_torque(0.0, tpu95a()).torque, 0.0);
  EXPECT_DOUBLE_EQ(bending_torque(2.5, sil950()).torque, 4.75);
  const auto over = bending_torque(30.0, tpu95a());
  EXPECT_TRUE(over.overfolded);
  EXPECT_EQ(over.torque, 39.0);
  EXPECT_FALSE(bending_torque(25.0, tpu95a()).overfolded);
  EXPECT_THROW(bending_torque(-1.0, tpu95a()), DomainError);
}

TEST(ModuleMechanics, BendingContactForce) {
  EXPECT_DOUBLE_EQ(bending_contact_force(15.0, 15.0, tpu95a()), 2.6);
  EXPECT_NEAR(bending_contact_force(15.0, 15.0, sil950()), 0.633333, 1e-6);
  EXPECT_EQ(bending_contact_force(0.0, 15.0, tpu95a()), 0.0);
  // Torque read as N*m instead of N*mm.
  EXPECT_DOUBLE_EQ(bending_contact_force(15.0, 15.0, tpu95a(), 1000.0), 2600.0);
  EXPECT_THROW(bending_contact_force(15.0, 0.0, tpu95a()), DomainError);
}

TEST(ModuleMechanics, ContinuityAtBreakpoints) {
  constexpr double eps = 1e-6;
  for (const auto& m : builtin_materials()) {
    for (double x : {m.strain_lo, m.strain_hi}) {
      EXPECT_NEAR(compression_force(x + eps, m).force, compression_force(x - eps, m).force, 1e-3)
          << m.name << " strain " << x;
    }
    for (double a : {m.angle_lo, m.angle_hi}) {
      EXPECT_NEAR(bending_torque(a + eps, m).torque, bending_torque(a - eps, m).torque, 1e-3)
          << m.name << " angle " << a;
    }
  }
}

TEST(ModuleMechanics, PlateauIsExactlyFlat) {
  for (const auto& m : builtin_materials()) {
    for (int i = 0; i < 100; ++i) {
      const double s = m.strain_lo + (m.strain_hi - m.strain_lo) * i / 99.0;
      const double a = m.angle_lo + (m.angle_hi - m.angle_lo) * i / 99.0;
      EXPECT_EQ(compression_force(s, m).force, m.plateau_force);
      EXPECT_EQ(bending_torque(a, m).torque, m.plateau_torque);
    }
  }
}

TEST(ModuleMechanics, MonotoneNonDecreasing) {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> strain(0.0, 1.5), angle(0.0, 40.0);
  for (const auto& m : builtin_materials()) {
    for (int i = 0; i < 2000; ++i) {
      double a = strain(rng), b = strain(rng);
      if (a > b) std::swap(a, b);
      EXPECT_LE(compression_force(a, m).force, compression_force(b, m).force);
      double x = angle(rng), y = angle(rng);
      if (x > y) std::swap(x, y);
      EXPECT_LE(bending_torque(x, m).torque, bending_torque(y, m).torque);
    }
  }
}

TEST(ModuleMechanics, BuiltinBands) {
  const auto t = tpu95a();
  EXPECT_DOUBLE_EQ(t.plateau_force * (1.0 - t.force_band), 4.5);
  EXPECT_DOUBLE_EQ(t.plateau_force * (1.0 + t.force_band), 5.0);
  EXPECT_EQ(sil950().plateau_force, 1.0);
  for (const auto& m : builtin_materials()) EXPECT_NO_THROW(m.validate());
}

TEST(ModuleMechanics, ValidationRejectsBadMaterials) {
  auto m = tpu95a();
  m.strain_lo = 0.6;
  EXPECT_THROW(m.validate(), DomainError);
  m = tpu95a();
  m.force_band = 0.25;
  EXPECT_THROW(m.validate(), DomainError);
  m = tpu95a();
  m.plateau_torque = 0.0;
  EXPECT_THROW(m.validate(), DomainError);
  m = tpu95a();
  m.angle_hi = 4.0;
  EXPECT_THROW(m.validate(), DomainError);
}

TEST(ModuleMechanics, PerturbationStaysInBandAndIsSeeded) {
  for (const auto& m : builtin_materials()) {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      const auto p = perturb_within_band(m, seed);
      EXPECT_LE(std::abs(p.plateau_force / m.plateau_force - 1.0), m.force_band + 1e-15);
      EXPECT_LE(std::abs(p.plateau_torque / m.plateau_torque - 1.0), m.torque_band + 1e-15);
      EXPECT_EQ(p, perturb_within_band(m, seed));
    }
  }
  EXPECT_NE(perturb_within_band(tpu95a(), 1), perturb_within_band(tpu95a(), 2));
}

}  // namespace
}  // namespace origrip
