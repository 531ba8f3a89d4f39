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

#include "origrip/transmission.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <fmt/format.h>

#include "origrip/errors.hpp"

namespace origrip {

void TransmissionLaw::validate() const {
  if (!(slope > 0.0)) throw DomainError(fmt::format("transmission slope must be > 0, got {}", slope));
  if (!(theta_min < theta_max)) {
    throw DomainError(fmt::format("transmission requires theta_min < theta_max, got [{}, {}]",
                                  theta_min, theta_max));
  }
}

void GripperConfig::validate() const {
  law.validate();
  if (finger_count != 2 && finger_count != 4) {
    throw DomainError(fmt::format("finger_count must be 2 or 4, got {}", finger_count));
  }
  if (!(module_offset >= 0.0)) throw DomainError("module_offset must be >= 0");
  const double r_inner = law.r0 - law.slope * law.theta_max;
  if (!(module_offset < r_inner)) {
    throw DomainError(fmt::format(
        "module_offset ({}) must be smaller than the innermost guide radius ({})",
        module_offset, r_inner));
  }
  if (module_levels.empty()) throw DomainError("module_levels must not be empty");
  if (!std::is_sorted(module_levels.begin(), module_levels.end()) ||
      std::adjacent_find(module_levels.begin(), module_levels.end()) != module_levels.end()) {
    throw DomainError("module_levels must be strictly increasing");
  }
  if (!(face_span > 0.0)) throw DomainError("face_span must be > 0");
  if (!(panel_span > 0.0)) throw DomainError("panel_span must be > 0");
  if (!(rest_depth > 0.0)) throw DomainError("rest_depth must be > 0");
  if (!(curvature_threshold > 0.0)) throw DomainError("curvature_threshold must be > 0");
  if (!(lever_arm > 0.0)) throw DomainError("lever_arm must be > 0");
}

double finger_radius(double theta_deg, const TransmissionLaw& law) {
  if (!(theta_deg >= law.theta_min && theta_deg <= law.theta_max)) {
    throw DomainError(fmt::format("servo angle {} deg outside valid interval [{}, {}] deg",
                                  theta_deg, law.theta_min, law.theta_max));
  }
  return law.r0 - law.slope * theta_deg;
}

double opening(double theta_deg, const GripperConfig& config) {
  return 2.0 * (finger_radius(theta_deg, config.law) - config.module_offset);
}

double theta_for_opening(double target_mm, const GripperConfig& config) {
  const auto& law = config.law;
  const double lo = opening(law.theta_max, config);
  const double hi = opening(law.theta_min, config);
  // Accept endpoints that differ from the bounds by rounding only.
  const double slack = 1e-12 * std::max(1.0, std::abs(hi));
  if (!(target_mm >= lo - slack && target_mm <= hi + slack)) {
    throw RangeError(fmt::format("opening {} mm not achievable; reachable range is [{}, {}] mm",
                                 target_mm, lo, hi),
                     lo, hi);
  }
  const double theta = (law.r0 - config.module_offset - 0.5 * target_mm) / law.slope;
  return std::clamp(theta, law.theta_min, law.theta_max);
}

}  // namespace origrip
