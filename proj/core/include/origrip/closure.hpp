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

#ifndef ORIGRIP_CLOSURE_HPP_
#define ORIGRIP_CLOSURE_HPP_

#include <optional>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "origrip/grasp_engine.hpp"

namespace origrip {

// Planar wrench (fx, fy, tau_z / characteristic_radius).
using Wrench = Eigen::Vector3d;

// Two linearised friction-cone edges per contact, each with normal
// component equal to the contact's normal force.
std::vector<Wrench> contact_wrench_primitives(const ContactSet& contacts);

struct ClosureResult {
  bool force_closure = false;
  bool form_closure = false;
  // Radius of the largest origin-centred ball inside the convex hull of the
  // primitives; 0 when not force-closed.
  double margin = 0.0;
  std::optional<double> wrap_angle;  // deg, v-enveloping only
};

// Origin strictly inside conv(primitives), decided by a linear program.
ClosureResult is_force_closure(std::span<const Wrench> primitives);

struct FormClosureResult {
  bool closed = false;
  double wrap_angle = 0.0;  // deg, union of the angular contact sectors
};

// Angular wrap coverage test for v-enveloping grasps. Each bending contact
// covers a sector of +/- bend_angle about its finger azimuth; the grasp is
// form-closed when coverage >= 180 + 2 * slip_margin. Throws DomainError on
// parallel grasps.
FormClosureResult is_form_closure(const ContactSet& contacts,
                                  const ObjectShape& object,
                                  double slip_margin_deg = 15.0);

// Convenience: primitives + force closure + form closure (when enveloping).
ClosureResult analyse_closure(const ContactSet& contacts, const ObjectShape& object);

}  // namespace origrip

#endif  // ORIGRIP_CLOSURE_HPP_
