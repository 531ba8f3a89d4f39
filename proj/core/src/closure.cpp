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

#include "origrip/closure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <utility>

#include <Eigen/Geometry>
#include <Eigen/LU>

#include "origrip/errors.hpp"
#include "simplex.hpp"

namespace origrip {
namespace {

constexpr double kRad = 180.0 / std::numbers::pi;

std::vector<Wrench> unique_scaled(std::span<const Wrench> w, double scale) {
  std::vector<Wrench> out;
  for (const auto& p : w) {
    const Wrench q = p / scale;
    const bool dup = std::any_of(out.begin(), out.end(),
                                 [&](const Wrench& o) { return (o - q).norm() < 1e-12; });
    if (!dup) out.push_back(q);
  }
  return out;
}

// Smallest distance from the origin to a supporting facet plane of the hull.
double hull_margin(const std::vector<Wrench>& pts) {
  const std::size_t n = pts.size();
  double margin = std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      for (std::size_t c = b + 1; c < n; ++c) {
        Eigen::Vector3d nrm = (pts[b] - pts[a]).cross(pts[c] - pts[a]);
        const double len = nrm.norm();
        if (len < 1e-12) continue;
        nrm /= len;
        const double off = nrm.dot(pts[a]);
        bool above = false, below = false;
        for (const auto& p : pts) {
          const double d = nrm.dot(p) - off;
          if (d > 1e-10) above = true;
          if (d < -1e-10) below = true;
          if (above && below) break;
        }
        if (above && below) continue;
        margin = std::min(margin, std::abs(off));
      }
    }
  }
  return std::isfinite(margin) ? margin : 0.0;
}

}  // namespace

std::vector<Wrench> contact_wrench_primitives(const ContactSet& contacts) {
  if (contacts.empty()) throw DomainError("contact set is empty");
  const double rho = contacts.characteristic_radius > 0.0 ? contacts.characteristic_radius : 1.0;
  std::vector<Wrench> out;
  out.reserve(2 * contacts.size());
  for (const auto& c : contacts.contacts) {
    const Eigen::Vector2d n = c.normal_direction;
    const Eigen::Vector2d t(-n.y(), n.x());
    for (double side : {1.0, -1.0}) {
      const Eigen::Vector2d f = c.normal_force * (n + side * c.mu * t);
      const double torque = c.position.x() * f.y() - c.position.y() * f.x();
      out.emplace_back(f.x(), f.y(), torque / rho);
    }
  }
  return out;
}

ClosureResult is_force_closure(std::span<const Wrench> primitives) {
  if (primitives.size() < 2) throw DomainError("force closure needs at least two wrenches");
  ClosureResult result;
  double scale = 0.0;
  for (const auto& w : primitives) scale = std::max(scale, w.norm());
  if (scale <= 0.0) return result;

  const auto pts = unique_scaled(primitives, scale);
  Eigen::MatrixXd W(3, static_cast<Eigen::Index>(pts.size()));
  for (std::size_t i = 0; i < pts.size(); ++i) W.col(static_cast<Eigen::Index>(i)) = pts[i];
  Eigen::FullPivLU<Eigen::MatrixXd> lu(W);
  lu.setThreshold(1e-9);
  if (lu.rank() < 3) return result;

  // Strict interior test: maximise s with sum(l_i w_i) = 0, sum(l_i) = 1,
  // l_i >= s, written in the variables (s, l_i - s).
  const auto n = static_cast<Eigen::Index>(pts.size());
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(4, n + 1);
  A.block(0, 1, 3, n) = W;
  A.block(0, 0, 3, 1) = W.rowwise().sum();
  A(3, 0) = static_cast<double>(n);
  A.block(3, 1, 1, n).setOnes();
  Eigen::VectorXd b = Eigen::VectorXd::Zero(4);
  b(3) = 1.0;
  Eigen::VectorXd c = Eigen::VectorXd::Zero(n + 1);
  c(0) = 1.0;
  const auto lp = detail::solve_lp(A, b, c);
  if (lp.status != detail::LpStatus::Optimal || lp.objective <= 1e-9) return result;

  result.force_closure = true;
  result.margin = hull_margin(pts) * scale;
  return result;
}

FormClosureResult is_form_closure(const ContactSet& contacts, const ObjectShape& object,
                                  double slip_margin_deg) {
  if (contacts.mode != GraspMode::VEnveloping || !object.has_curved_profile()) {
    throw DomainError("form closure is defined for v-enveloping grasps only");
  }
  std::vector<std::pair<double, double>> arcs;
  for (const auto& c : contacts.contacts) {
    if (!c.bend_angle || *c.bend_angle <= 0.0) continue;
    const double half = std::min(*c.bend_angle, 180.0);
    const double centre = std::atan2(-c.normal_direction.y(), -c.normal_direction.x()) * kRad;
    const double lo = std::fmod(centre - half + 720.0, 360.0);
    const double hi = lo + 2.0 * half;
    if (hi > 360.0) {
      arcs.emplace_back(lo, 360.0);
      arcs.emplace_back(0.0, hi - 360.0);
    } else {
      arcs.emplace_back(lo, hi);
    }
  }
  std::sort(arcs.begin(), arcs.end());
  double covered = 0.0, cur_lo = 0.0, cur_hi = -1.0;
  for (const auto& [lo, hi] : arcs) {
    if (lo > cur_hi) {
      if (cur_hi > cur_lo) covered += cur_hi - cur_lo;
      cur_lo = lo;
      cur_hi = hi;
    } else {
      cur_hi = std::max(cur_hi, hi);
    }
  }
  if (cur_hi > cur_lo) covered += cur_hi - cur_lo;
  covered = std::min(covered, 360.0);
  return {covered >= 180.0 + 2.0 * slip_margin_deg, covered};
}

ClosureResult analyse_closure(const ContactSet& contacts, const ObjectShape& object) {
  ClosureResult result;
  if (contacts.empty()) return result;
  const auto prims = contact_wrench_primitives(contacts);
  if (prims.size() >= 2) result = is_force_closure(prims);
  if (contacts.mode == GraspMode::VEnveloping && object.has_curved_profile()) {
    const auto form = is_form_closure(contacts, object);
    result.form_closure = form.closed;
    result.wrap_angle = form.wrap_angle;
  }
  return result;
}

}  // namespace origrip
