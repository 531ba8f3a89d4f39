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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero when any of them fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include <fmt/format.h>

#include "origrip/closure.hpp"
#include "origrip/evaluate.hpp"
#include "origrip/report.hpp"
#include "support/oracles.hpp"

namespace origrip {
namespace {

struct Verdict {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

bool run(int id, const char* title, double budget_s, const std::function<Verdict()>& body) {
  const auto t0 = Clock::now();
  Verdict v;
  try {
    v = body();
  } catch (const std::exception& e) {
    v = {false, fmt::format("exception: {}", e.what())};
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  if (budget_s > 0.0 && secs > budget_s) {
    v.pass = false;
    v.detail += fmt::format("; over time budget {} s", budget_s);
  }
  std::printf("%s criterion %d (%s): %s [%.3f s]\n", v.pass ? "PASS" : "FAIL", id, title,
              v.detail.c_str(), secs);
  std::fflush(stdout);
  return v.pass;
}

const MaterialLibrary& lib() {
  static const MaterialLibrary l = builtin_material_library();
  return l;
}

Verdict plateaus() {
  const auto tpu = tpu95a();
  const auto sil = sil950();
  double sil_f_dev = 0.0, tpu_f_lo = 1e9, tpu_f_hi = -1e9;
  double sil_t_dev = 0.0, tpu_t_dev = 0.0;
  for (int i = 0; i <= 400; ++i) {
    const double strain = 0.1 + 0.4 * i / 400.0;
    sil_f_dev = std::max(sil_f_dev, std::abs(compression_force(strain, sil).force - 1.0));
    const double f = compression_force(strain, tpu).force;
    tpu_f_lo = std::min(tpu_f_lo, f);
    tpu_f_hi = std::max(tpu_f_hi, f);
    const double angle = 5.0 + 20.0 * i / 400.0;
    sil_t_dev = std::max(sil_t_dev, std::abs(bending_torque(angle, sil).torque / 9.5 - 1.0));
    tpu_t_dev = std::max(tpu_t_dev, std::abs(bending_torque(angle, tpu).torque / 39.0 - 1.0));
  }
  // The CLI table goes through the same functions; render it once as well.
  const auto csv = render_material_curve(sil, 0.05, 2.5, Format::Csv);
  const bool pass = sil_f_dev == 0.0 && tpu_f_lo >= 4.5 && tpu_f_hi <= 5.0 &&
                    sil_t_dev <= 0.03 && tpu_t_dev <= 0.05 && !csv.empty();
  return {pass, fmt::format("silicone force dev {:.3g} N, TPU force [{}, {}] N, torque dev "
                            "silicone {:.3g} TPU {:.3g}",
                            sil_f_dev, tpu_f_lo, tpu_f_hi, sil_t_dev, tpu_t_dev)};
}

Verdict transmission() {
  const GripperConfig g;
  const double o0 = opening(0.0, g);
  const double o90 = opening(90.0, g);
  double worst = 0.0;
  for (int i = 0; i <= 9000; ++i) {
    const double theta = 0.01 * i;
    worst = std::max(worst, std::abs(theta_for_opening(opening(theta, g), g) - theta));
  }
  return {o0 == 78.0 && o90 == 28.0 && worst <= 1e-9,
          fmt::format("opening(0) = {} mm, opening(90) = {} mm, worst round trip {:.3g} deg",
                      o0, o90, worst)};
}

ObjectShape demo_probe(const char* scene) {
  const auto s = demo_scene(scene);
  return centred_between_levels(s.object(std::get<PulloutParams>(s.params).object), s.gripper);
}

Verdict pullout_calibration() {
  const GripperConfig g;
  const auto probe = demo_probe("pullout_venv_tpu_60");
  const double mu = calibrate_mu(60.0, probe, g, tpu95a(), 1.5);
  const auto tpu = resolve_contacts(60.0, probe, g, tpu95a(), mu);
  const auto sil = resolve_contacts(60.0, probe, g, sil950(), mu);
  const double finger = finger_pullout_force(tpu, 0);
  const double lift = pullout_capacity(tpu);
  const double sil_lift = pullout_capacity(sil);
  const bool ok_tpu = std::abs(finger - 1.5) <= 0.15 && std::abs(lift - 3.0) <= 0.3;
  const bool ok_sil = sil_lift >= 1.0 && sil_lift <= 2.0;
  return {ok_tpu && ok_sil,
          fmt::format("mu {:.6f}; TPU per finger {:.4f} N, two-finger {:.4f} N; silicone "
                      "two-finger {:.4f} N (per finger {:.4f} N), required [1, 2] N",
                      mu, finger, lift, sil_lift, finger_pullout_force(sil, 0))};
}

// Returns an empty string when the trace has the expected shape.
std::string trace_problem(const char* scene_name) {
  const auto s = demo_scene(scene_name);
  const auto& p = std::get<PulloutParams>(s.params);
  const auto probe = centred_between_levels(s.object(p.object), s.gripper);
  const auto material = s.material(p.material, lib());
  const auto contacts = resolve_contacts(p.theta, probe, s.gripper, material, s.environment.mu);
  const auto grid = pullout_lift_grid(probe, s.gripper, p.lift_step);
  const auto trace = pullout_trace(p.theta, probe, s.gripper, material, s.environment.mu, grid);
  const auto& pts = trace.points;
  if (!trace.t4) return "never fully disengages";
  for (const auto& tp : pts)
    if (tp.lift >= *trace.t4 && tp.force != 0.0) return "non-zero after disengagement";

  if (contacts.mode == GraspMode::VEnveloping) {
    if (!trace.t2) return "no t2 marker";
    double lo = 1e300, hi = -1e300;
    for (const auto& tp : pts) {
      if (tp.lift > *trace.t2) break;
      lo = std::min(lo, tp.force);
      hi = std::max(hi, tp.force);
    }
    return hi > lo ? "" : "constant before t2";
  }
  // Parallel: constant runs among the non-zero samples, one drop between.
  int plateaus = 0, run = 0, drops = 0;
  bool drop_at_top_release = true;
  for (std::size_t i = 0; i < pts.size() && pts[i].force > 0.0; ++i) {
    ++run;
    const bool last = i + 1 == pts.size() || pts[i + 1].force == 0.0;
    if (last || pts[i + 1].force != pts[i].force) {
      if (run >= 2) ++plateaus;
      run = 0;
      if (!last) {
        ++drops;
        if (pts[i + 1].force > pts[i].force) return "force rises during pull-out";
        if (!(pts[i].top_contacts > 0 && pts[i + 1].top_contacts == 0)) drop_at_top_release = false;
      }
    }
  }
  if (plateaus < 2) return fmt::format("{} plateau(s)", plateaus);
  if (drops != 1) return fmt::format("{} drops between plateaus", drops);
  if (!drop_at_top_release) return "drop not at top-module disengagement";
  return "";
}

Verdict trace_shape() {
  std::string bad;
  int checked = 0;
  for (const char* mode : {"parallel", "venv"})
    for (const char* mat : {"tpu", "sil"})
      for (const char* theta : {"30", "60"}) {
        const auto name = fmt::format("pullout_{}_{}_{}", mode, mat, theta);
        const auto problem = trace_problem(name.c_str());
        ++checked;
        if (!problem.empty()) bad += fmt::format(" {}: {};", name, problem);
      }
  return {bad.empty(), bad.empty() ? fmt::format("{} traces have the expected shape", checked)
                                   : "bad traces:" + bad};
}

Verdict multi_object() {
  std::string bad;
  for (const char* name : {"stack_spheres", "stack_cubes", "stack_sphere_cube", "stack_cuboids"}) {
    const auto scene = stacked_scene(demo_scene(name), lib());
    const auto out = plan_stacked(scene);
    if (!out.feasible()) {
      bad += fmt::format(" {} infeasible ({});", name, out.infeasible->message);
      continue;
    }
    const auto sim = simulate_plan(*out.plan, scene);
    if (!sim.passed || sim.timeline != kExpectedTimeline) bad += fmt::format(" {} simulation;", name);
  }
  const auto spheres = plan_stacked(stacked_scene(demo_scene("stack_spheres"), lib()));
  const bool forty = spheres.top_window && spheres.bottom_window &&
                     spheres.top_window->contains(40.0) && 40.0 < spheres.bottom_window->theta_lo;
  if (!forty) bad += " 40 deg outside the sphere release window;";

  std::mt19937 rng(2026);
  int windows = 0, mismatches = 0;
  for (int i = 0; i < 50; ++i) {
    const auto scene = testing::random_stacked_scene(rng);
    const auto [top, bottom] = place_stack(scene);
    const auto ctx = HoldContext::from(scene);
    for (const auto* o : {&top, &bottom}) {
      const auto w = hold_window(*o, ctx);
      const auto sweep = testing::sweep_window(*o, ctx);
      ++windows;
      const double tol = 0.1 + 1e-9;
      const bool agree =
          w ? !sweep.empty && std::abs(w->theta_lo - sweep.lo) <= tol &&
                  std::abs(w->theta_hi - sweep.hi) <= tol
            : sweep.empty || sweep.hi - sweep.lo <= tol;
      if (!agree) ++mismatches;
    }
  }
  if (mismatches) bad += fmt::format(" {} window mismatches;", mismatches);
  return {bad.empty(),
          fmt::format("4 demo plans pass, sphere release window [{}, {}) holds 40 deg, {} oracle "
                      "windows checked, {} mismatches{}",
                      spheres.top_window ? spheres.top_window->theta_lo : NAN,
                      spheres.bottom_window ? spheres.bottom_window->theta_lo : NAN, windows,
                      mismatches, bad.empty() ? "" : ";" + bad)};
}

Verdict efficiency() {
  const auto s = demo_scene("compare_default");
  const auto& pp = std::get<PickPlaceParams>(s.params);
  const auto plan = plan_stacked(stacked_scene(s, lib()));
  const auto c = compare(pp.layout, plan);
  const bool ok_demo = std::abs(c.distance_reduction - 33.0) <= 3.0 &&
                       std::abs(c.time_reduction - 31.0) <= 3.0;

  std::mt19937 rng(515);
  std::uniform_real_distribution<double> xy(-600.0, 600.0), h(5.0, 150.0), v(1.0, 200.0);
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    PickPlaceScene r;
    r.pick = {xy(rng), xy(rng)};
    r.place_bottom = {xy(rng), xy(rng)};
    r.place_top = {xy(rng), xy(rng)};
    r.approach_height = h(rng);
    r.travel_speed = v(rng);
    r.descend_speed = v(rng);
    const auto rc = compare(r, plan);
    const double scale = std::max(1.0, rc.sequential.distance);
    worst = std::max(worst, std::abs(rc.sequential.distance - rc.multi.distance -
                                     eliminated_distance(r)) / scale);
  }
  return {ok_demo && worst <= 1e-12,
          fmt::format("distance reduction {:.3f}%, time reduction {:.3f}% (sequential {:.3f} mm "
                      "/ {:.3f} s, multi {:.3f} mm / {:.3f} s); identity worst rel. error {:.3g}",
                      c.distance_reduction, c.time_reduction, c.sequential.distance,
                      c.sequential.time, c.multi.distance, c.multi.time, worst)};
}

Verdict closure_engine() {
  const testing::ClosureOracle oracle;
  std::mt19937 rng(7);
  int decided = 0, disagreements = 0, draws = 0;
  while (decided < 100 && draws < 100000) {
    ++draws;
    const auto w = contact_wrench_primitives(testing::random_contact_set(rng));
    const auto v = oracle(w);
    if (v == testing::OracleVerdict::Uncertain) continue;
    ++decided;
    if (is_force_closure(w).force_closure != (v == testing::OracleVerdict::Closed)) ++disagreements;
  }

  std::uniform_real_distribution<double> u(0.0, 1.0);
  int frictionless_closed = 0;
  for (int i = 0; i < 100; ++i) {
    ContactSet set;
    set.characteristic_radius = 10.0 + 40.0 * u(rng);
    const double a = 6.283185307179586 * u(rng);
    const Eigen::Vector2d n(std::cos(a), std::sin(a));
    for (int k = 0; k < 2; ++k) {
      ContactRecord c;
      const double sign = k == 0 ? 1.0 : -1.0;
      c.position = sign * set.characteristic_radius * n;
      c.normal_direction = -sign * n;
      c.normal_force = 0.1 + 5.0 * u(rng);
      c.mu = 0.0;
      set.contacts.push_back(c);
    }
    if (is_force_closure(contact_wrench_primitives(set)).force_closure) ++frictionless_closed;
  }

  int flips = 0;
  for (int i = 0; i < 100; ++i) {
    auto set = testing::random_contact_set(rng);
    const bool before = is_force_closure(contact_wrench_primitives(set)).force_closure;
    const double c = std::exp(std::uniform_real_distribution<double>(-6.0, 6.0)(rng));
    for (auto& ct : set.contacts) ct.normal_force *= c;
    if (is_force_closure(contact_wrench_primitives(set)).force_closure != before) ++flips;
  }
  return {decided == 100 && disagreements == 0 && frictionless_closed == 0 && flips == 0,
          fmt::format("{} decided sets ({} draws), {} disagreements; frictionless pairs closed "
                      "{}/100; scaling flips {}/100",
                      decided, draws, disagreements, frictionless_closed, flips)};
}

Verdict determinism() {
  std::size_t bytes = 0;
  for (auto f : {Format::Csv, Format::Json}) {
    const auto a = render_demo_suite(f);
    const auto b = render_demo_suite(f);
    if (a != b) return {false, fmt::format("{} output differs between runs",
                                           f == Format::Csv ? "CSV" : "JSON")};
    bytes += a.size();
  }
  return {true, fmt::format("CSV and JSON demo suites identical across two runs ({} bytes)", bytes)};
}

}  // namespace
}  // namespace origrip

int main() {
  using namespace origrip;
  int failed = 0;
  failed += !run(1, "constitutive plateaus", 1.0, plateaus);
  failed += !run(2, "transmission endpoints", 1.0, transmission);
  failed += !run(3, "pull-out calibration", 0.0, pullout_calibration);
  failed += !run(4, "pull-out trace shape", 0.0, trace_shape);
  failed += !run(5, "multi-object plans", 30.0, multi_object);
  failed += !run(6, "efficiency deltas", 0.0, efficiency);
  failed += !run(7, "closure engine", 0.0, closure_engine);
  failed += !run(8, "determinism", 0.0, determinism);
  std::printf("%d of 8 criteria passed\n", 8 - failed);
  return failed == 0 ? 0 : 1;
}
