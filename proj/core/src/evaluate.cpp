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

#include "origrip/evaluate.hpp"

#include <cmath>
#include <future>
#include <type_traits>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "origrip/closure.hpp"
#include "origrip/output.hpp"

#ifndef ORIGRIP_VERSION
#define ORIGRIP_VERSION "0.0.0"
#endif

namespace origrip {
namespace {

double r6(double x) { return round_sig(x); }

Json optional_number(const std::optional<double>& v) { return v ? Json(r6(*v)) : Json(nullptr); }

Json window_json(const std::optional<HoldWindow>& w) {
  if (!w) return nullptr;
  return Json{{"theta_lo", r6(w->theta_lo)},
              {"theta_hi", r6(w->theta_hi)},
              {"limiting_factor", std::string(to_string(w->limiting_factor))}};
}

Json contact_json(const ContactRecord& c) {
  return Json{{"finger", c.finger_index},
              {"level", c.level},
              {"mode", std::string(to_string(c.mode))},
              {"penetration", optional_number(c.penetration)},
              {"bend_angle", optional_number(c.bend_angle)},
              {"normal_force", r6(c.normal_force)},
              {"inclination", r6(c.inclination)},
              {"height", r6(c.height)},
              {"overcompressed", c.overcompressed},
              {"overfolded", c.overfolded}};
}

Json outcome_json(const PlanOutcome& o) {
  Json j;
  j["feasible"] = o.feasible();
  j["reason"] = o.infeasible ? Json(std::string(to_string(o.infeasible->reason))) : Json(nullptr);
  j["message"] = o.infeasible ? Json(o.infeasible->message) : Json(nullptr);
  j["top_window"] = window_json(o.top_window);
  j["bottom_window"] = window_json(o.bottom_window);
  if (o.plan) {
    j["plan"] = Json{{"theta_grasp", r6(o.plan->theta_grasp)},
                     {"theta_release_bottom", r6(o.plan->theta_release_bottom)},
                     {"theta_release_top", r6(o.plan->theta_release_top)}};
  } else {
    j["plan"] = nullptr;
  }
  return j;
}

Json simulation_json(const SimulationResult& s) {
  Json stages = Json::array();
  for (std::size_t i = 0; i < 3; ++i) {
    stages.push_back(Json{{"theta", r6(s.stage_theta[i])},
                          {"top_held", s.timeline[i].top_held},
                          {"bottom_held", s.timeline[i].bottom_held}});
  }
  return Json{{"stages", stages},
              {"passed", s.passed},
              {"failed_stage", s.failed_stage ? Json(*s.failed_stage) : Json(nullptr)}};
}

std::string fnv1a_hex(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return fmt::format("{:016x}", h);
}

// Applies the command-line overrides to a copy of the scenario.
Scenario apply_overrides(Scenario s, const EvalOptions& opt) {
  if (opt.mu) s.environment.mu = *opt.mu;
  std::visit(
      [&](auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, SingleGraspParams> || std::is_same_v<T, PulloutParams>) {
          if (opt.theta) p.theta = *opt.theta;
          if (opt.material) p.material = *opt.material;
          if constexpr (std::is_same_v<T, PulloutParams>) {
            if (opt.lift_step) p.lift_step = *opt.lift_step;
          }
        } else if constexpr (std::is_same_v<T, StackedParams>) {
          if (opt.material) p.material = *opt.material;
        } else {
          if (opt.material) p.stack.material = *opt.material;
        }
      },
      s.params);
  return s;
}

void collect_paths(const nlohmann::json& j, const std::string& path, std::vector<std::string>& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) collect_paths(v, path.empty() ? k : path + "." + k, out);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) collect_paths(j[i], fmt::format("{}[{}]", path, i), out);
  } else if (j.is_number()) {
    out.push_back(path);
  }
}

nlohmann::json* find_path(nlohmann::json& root, std::string_view path) {
  nlohmann::json* node = &root;
  std::size_t pos = 0;
  while (pos < path.size()) {
    const std::size_t end = path.find_first_of(".[", pos);
    const std::string key(path.substr(pos, end == std::string_view::npos ? path.npos : end - pos));
    if (!key.empty()) {
      if (!node->is_object() || !node->contains(key)) return nullptr;
      node = &(*node)[key];
    }
    if (end == std::string_view::npos) break;
    if (path[end] == '[') {
      const std::size_t close = path.find(']', end);
      if (close == std::string_view::npos) return nullptr;
      std::size_t idx = 0;
      try {
        idx = std::stoul(std::string(path.substr(end + 1, close - end - 1)));
      } catch (const std::exception&) {
        return nullptr;
      }
      if (!node->is_array() || idx >= node->size()) return nullptr;
      node = &(*node)[idx];
      pos = close + 1;
      if (pos < path.size() && path[pos] == '.') ++pos;
    } else {
      pos = end + 1;
    }
  }
  return node;
}

}  // namespace

std::string_view version() { return ORIGRIP_VERSION; }

Json to_json(const ResultRecord& r) {
  return Json{{"command", r.command},
              {"inputs_digest", r.inputs_digest},
              {"outputs", r.outputs},
              {"version", r.version}};
}

ResultRecord record_from_json(const Json& j) {
  try {
    return ResultRecord{j.at("command").get<std::string>(), j.at("inputs_digest").get<std::string>(),
                        j.at("outputs"), j.at("version").get<std::string>()};
  } catch (const Json::exception& e) {
    throw ValidationError({{"", fmt::format("malformed result record: {}", e.what())}});
  }
}

std::string scenario_digest(const Scenario& scenario) {
  return fnv1a_hex(serialize_scenario(scenario));
}

ResultRecord evaluate(const Scenario& input, const MaterialLibrary& library,
                      const EvalOptions& options) {
  const Scenario s = apply_overrides(input, options);
  auto material_for = [&](const std::string& name) {
    MaterialModel m = s.material(name, library);
    return options.seed ? perturb_within_band(m, *options.seed) : m;
  };
  ResultRecord rec;
  rec.version = std::string(version());
  rec.inputs_digest = scenario_digest(s);
  if (options.seed) {
    rec.inputs_digest = fnv1a_hex(fmt::format("{}|seed={}", rec.inputs_digest, *options.seed));
  }
  const auto& env = s.environment;
  Json out;

  if (const auto* p = std::get_if<SingleGraspParams>(&s.params)) {
    rec.command = "grasp";
    const auto object = centred_between_levels(s.object(p->object), s.gripper);
    const auto material = material_for(p->material);
    const auto contacts = resolve_contacts(p->theta, object, s.gripper, material, env.mu,
                                           env.torque_unit_scale);
    const auto lift = lift_check(contacts, object, env.gravity, 1.0);
    const auto closure = analyse_closure(contacts, object);
    out["object"] = object.name;
    out["material"] = material.name;
    out["theta"] = r6(p->theta);
    out["opening"] = r6(opening(p->theta, s.gripper));
    out["grasp_mode"] = std::string(to_string(contacts.mode));
    Json cs = Json::array();
    for (const auto& c : contacts.contacts) cs.push_back(contact_json(c));
    out["contacts"] = cs;
    out["pullout_capacity"] = r6(pullout_capacity(contacts));
    out["lift_holds"] = lift.holds;
    out["lift_margin"] = r6(lift.margin);
    out["force_closure"] = closure.force_closure;
    out["closure_margin"] = r6(closure.margin);
    out["form_closure"] = closure.form_closure;
    out["wrap_angle"] = optional_number(closure.wrap_angle);
  } else if (const auto* p = std::get_if<PulloutParams>(&s.params)) {
    rec.command = "pullout";
    const auto probe = centred_between_levels(s.object(p->object), s.gripper);
    const auto material = material_for(p->material);
    const auto grid = pullout_lift_grid(probe, s.gripper, p->lift_step);
    const auto trace = pullout_trace(p->theta, probe, s.gripper, material, env.mu, grid,
                                     env.torque_unit_scale);
    const auto contacts = resolve_contacts(p->theta, probe, s.gripper, material, env.mu,
                                           env.torque_unit_scale);
    out["object"] = probe.name;
    out["material"] = material.name;
    out["theta"] = r6(p->theta);
    out["mu"] = r6(env.mu);
    out["grasp_mode"] = std::string(to_string(contacts.mode));
    out["pullout_force"] = r6(finger_pullout_force(contacts, 0));
    out["lift_capacity"] = r6(pullout_capacity(contacts));
    out["markers"] = Json{{"t1", optional_number(trace.t1)},
                          {"t2", optional_number(trace.t2)},
                          {"t3", optional_number(trace.t3)},
                          {"t4", optional_number(trace.t4)}};
    Json pts = Json::array();
    for (const auto& tp : trace.points) {
      pts.push_back(Json{{"lift", r6(tp.lift)},
                         {"force", r6(tp.force)},
                         {"top_contacts", tp.top_contacts},
                         {"bottom_contacts", tp.bottom_contacts}});
    }
    out["trace"] = pts;
  } else {
    auto scene = stacked_scene(s, library);
    if (options.seed) scene.material = perturb_within_band(scene.material, *options.seed);
    const auto outcome = plan_stacked(scene);
    out = outcome_json(outcome);
    if (const auto* pp = std::get_if<PickPlaceParams>(&s.params)) {
      rec.command = "compare";
      if (outcome.feasible()) {
        const auto cmp = compare(pp->layout, outcome);
        out["sequential"] = Json{{"distance", r6(cmp.sequential.distance)},
                                 {"time", r6(cmp.sequential.time)}};
        out["multi"] = Json{{"distance", r6(cmp.multi.distance)}, {"time", r6(cmp.multi.time)}};
        out["distance_reduction"] = r6(cmp.distance_reduction);
        out["time_reduction"] = r6(cmp.time_reduction);
        out["eliminated_distance"] = r6(eliminated_distance(pp->layout));
      }
    } else {
      rec.command = "multi";
      if (outcome.feasible()) out["simulation"] = simulation_json(simulate_plan(*outcome.plan, scene));
    }
  }
  rec.outputs = std::move(out);
  return rec;
}

std::vector<std::string> sweepable_paths(const Scenario& scenario) {
  std::vector<std::string> out;
  collect_paths(nlohmann::json::parse(serialize_scenario(scenario)), "", out);
  return out;
}

namespace {

nlohmann::json* locate_axis(nlohmann::json& doc, std::string_view path, const Scenario& scenario) {
  nlohmann::json* node = find_path(doc, path);
  if (!node || !node->is_number()) node = find_path(doc, fmt::format("scene.{}", path));
  if (!node || !node->is_number()) {
    throw DomainError(fmt::format("'{}' is not a numeric scenario field; sweepable paths: {}", path,
                                  fmt::join(sweepable_paths(scenario), ", ")));
  }
  return node;
}

}  // namespace

Scenario with_parameter(const Scenario& scenario, std::string_view path, double value,
                        const MaterialLibrary& library) {
  auto doc = nlohmann::json::parse(serialize_scenario(scenario));
  nlohmann::json* node = locate_axis(doc, path, scenario);
  if (node->is_number_integer() && value == std::floor(value)) {
    *node = static_cast<std::int64_t>(value);
  } else {
    *node = value;
  }
  return parse_scenario(doc.dump(), library);
}

std::vector<ResultRecord> run_sweep(const Scenario& base, std::string_view axis,
                                    std::span<const double> values, const MaterialLibrary& library,
                                    const EvalOptions& options) {
  // Resolve the axis up front so a bad path fails even for an empty list.
  auto doc = nlohmann::json::parse(serialize_scenario(base));
  locate_axis(doc, axis, base);
  std::vector<std::future<ResultRecord>> jobs;
  jobs.reserve(values.size());
  for (double v : values) {
    jobs.push_back(std::async(std::launch::async, [&base, axis, v, &library, &options] {
      return evaluate(with_parameter(base, axis, v, library), library, options);
    }));
  }
  std::vector<ResultRecord> out;
  out.reserve(values.size());
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

}  // namespace origrip
