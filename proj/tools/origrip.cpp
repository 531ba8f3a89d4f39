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

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "origrip/evaluate.hpp"
#include "origrip/report.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kInfeasible = 1;
constexpr int kInvalid = 2;

struct Common {
  std::string scene;
  std::string out;
  std::string format = "csv";
  std::optional<std::uint64_t> seed;
};

void add_common(CLI::App* cmd, Common& c, bool scene_required) {
  auto* s = cmd->add_option("--scene", c.scene, "Scenario file, or demo:NAME for a built-in scene");
  if (scene_required) s->required();
  cmd->add_option("--out", c.out, "Write output to this path instead of stdout");
  cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--seed", c.seed, "Perturb material curves within their bands");
}

origrip::Scenario load_scene(const std::string& ref, const origrip::MaterialLibrary& lib) {
  constexpr std::string_view demo = "demo:";
  if (ref.rfind(demo, 0) == 0) {
    return origrip::parse_scenario(origrip::demo_scene_text(ref.substr(demo.size())), lib);
  }
  std::ifstream in(ref);
  if (!in) throw origrip::ValidationError({{"--scene", "cannot open '" + ref + "'"}});
  std::stringstream ss;
  ss << in.rdbuf();
  return origrip::parse_scenario(ss.str(), lib);
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

std::vector<double> parse_values(const std::string& list) {
  std::vector<double> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    const double v = std::stod(item, &used);
    if (used != item.size()) throw origrip::DomainError("bad sweep value '" + item + "'");
    out.push_back(v);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Origami multi-object gripper simulator"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(origrip::version()));

  Common common;
  origrip::EvalOptions opts;
  double step = 10.0, strain_step = 0.05, angle_step = 1.0;
  std::string material, axis, values, waypoints;
  bool list_scenes = false;

  auto* kin = app.add_subcommand("kinematics", "Servo angle to opening table");
  add_common(kin, common, false);
  kin->add_option("--step", step, "Angle step in degrees");

  auto* curve = app.add_subcommand("material-curve", "Module force and torque curves");
  add_common(curve, common, false);
  curve->add_option("--material", material, "Material name (default: all built-ins)");
  curve->add_option("--strain-step", strain_step, "Strain sample step");
  curve->add_option("--angle-step", angle_step, "Bend angle sample step in degrees");

  auto* grasp = app.add_subcommand("grasp", "Contacts and closure of a single grasp");
  auto* pull = app.add_subcommand("pullout", "Pull-out force trace");
  for (auto* cmd : {grasp, pull}) {
    add_common(cmd, common, true);
    cmd->add_option("--theta", opts.theta, "Override the servo angle (deg)");
    cmd->add_option("--material", opts.material, "Override the module material");
    cmd->add_option("--mu", opts.mu, "Override the friction coefficient");
  }
  pull->add_option("--lift-step,--grid", opts.lift_step, "Lift sampling step (mm)");

  auto* multi = app.add_subcommand("multi", "Plan and simulate a stacked multi-object grasp");
  add_common(multi, common, true);
  multi->add_option("--mu", opts.mu, "Override the friction coefficient");
  bool plan_only = false;
  auto* plan_only_flag = multi->add_flag("--plan-only", plan_only, "Report the plan without simulating it");
  multi->add_flag("--simulate", "Simulate the plan stage by stage (default)")->excludes(plan_only_flag);

  auto* cmp = app.add_subcommand("compare", "Sequential vs multi-object pick and place");
  add_common(cmp, common, true);
  cmp->add_option("--emit-waypoints", waypoints, "Write both timed waypoint lists as CSV");
  std::string plan_file;
  cmp->add_option("--plan", plan_file, "JSON result of `multi` to check before comparing");

  auto* sweep = app.add_subcommand("sweep", "Evaluate a scenario over a parameter axis");
  add_common(sweep, common, true);
  sweep->add_option("--axis", axis, "Dotted numeric field path, e.g. scene.theta")->required();
  sweep->add_option("--values", values, "Comma separated values")->required();

  auto* scenes = app.add_subcommand("scenes", "List the built-in demo scenes");
  scenes->add_flag("--list", list_scenes);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    const auto format = origrip::format_from_string(common.format);
    opts.seed = common.seed;
    const auto library = origrip::default_material_library();

    if (*scenes) {
      std::string text;
      for (const auto& n : origrip::demo_scene_names()) text += n + "\n";
      emit(text, common.out);
      return kOk;
    }
    if (*kin) {
      origrip::GripperConfig g;
      if (!common.scene.empty()) g = load_scene(common.scene, library).gripper;
      emit(origrip::render_kinematics(g, step, format), common.out);
      return kOk;
    }
    if (*curve) {
      std::vector<origrip::MaterialModel> mats;
      std::optional<origrip::Scenario> sc;
      if (!common.scene.empty()) sc = load_scene(common.scene, library);
      if (!material.empty()) {
        mats.push_back(sc ? sc->material(material, library) : [&] {
          const auto it = library.find(material);
          if (it == library.end()) throw origrip::DomainError("no material named '" + material + "'");
          return it->second;
        }());
      } else {
        for (const auto& [_, m] : library) mats.push_back(m);
      }
      std::string text;
      for (auto m : mats) {
        if (common.seed) m = origrip::perturb_within_band(m, *common.seed);
        text += origrip::render_material_curve(m, strain_step, angle_step, format);
      }
      emit(text, common.out);
      return kOk;
    }

    const auto scenario = load_scene(common.scene, library);
    if (*sweep) {
      const auto xs = parse_values(values);
      const auto records = origrip::run_sweep(scenario, axis, xs, library, opts);
      emit(origrip::render_sweep(axis, xs, records, format), common.out);
      return kOk;
    }

    const auto expected = *grasp ? origrip::SceneKind::SingleGrasp
                          : *pull ? origrip::SceneKind::Pullout
                          : *multi ? origrip::SceneKind::Stacked
                                   : origrip::SceneKind::PickPlace;
    const bool stacked_ok = *multi && scenario.kind == origrip::SceneKind::PickPlace;
    if (scenario.kind != expected && !stacked_ok) {
      throw origrip::ValidationError(
          {{"kind", "command expects a '" + std::string(origrip::to_string(expected)) +
                        "' scenario, got '" + std::string(origrip::to_string(scenario.kind)) + "'"}});
    }

    auto target = scenario;
    if (stacked_ok) {
      // A pick-and-place scene also carries a stack; plan that part alone.
      target.kind = origrip::SceneKind::Stacked;
      target.params = std::get<origrip::PickPlaceParams>(scenario.params).stack;
    }
    if (*cmp && !plan_file.empty()) {
      std::ifstream in(plan_file);
      if (!in) throw origrip::ValidationError({{"--plan", "cannot open '" + plan_file + "'"}});
      const auto given = origrip::record_from_json(origrip::Json::parse(in));
      if (!given.outputs.contains("plan") || given.outputs["plan"].is_null()) {
        std::cerr << "infeasible: the supplied plan has no feasible schedule\n";
        return kInfeasible;
      }
    }
    auto record = origrip::evaluate(target, library, opts);
    if (plan_only) record.outputs.erase("simulation");
    emit(origrip::render_record(record, format), common.out);

    const auto& out = record.outputs;
    if (out.contains("feasible") && !out["feasible"].get<bool>()) {
      std::cerr << "infeasible: " << out["message"].get<std::string>() << "\n";
      return kInfeasible;
    }
    if (out.contains("simulation") && !out["simulation"]["passed"].get<bool>()) {
      std::cerr << "plan failed in simulation at stage " << out["simulation"]["failed_stage"] << "\n";
      return kInfeasible;
    }
    if (*cmp && !waypoints.empty()) {
      const auto& layout = std::get<origrip::PickPlaceParams>(scenario.params).layout;
      const auto outcome = origrip::plan_stacked(origrip::stacked_scene(scenario, library));
      emit(origrip::render_waypoints(
               origrip::build_trajectory(layout, origrip::Strategy::Sequential, outcome),
               origrip::build_trajectory(layout, origrip::Strategy::MultiObject, outcome)),
           waypoints);
    }
    return kOk;
  } catch (const origrip::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kInvalid;
  } catch (const origrip::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const origrip::RangeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const origrip::Json::exception& e) {
    std::cerr << "error: malformed JSON: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInfeasible;
  }
}
