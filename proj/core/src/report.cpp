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

#include "origrip/report.hpp"

#include <cmath>

#include <fmt/format.h>

#include "origrip/output.hpp"

namespace origrip {
namespace {

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string cell(const Json& v) {
  if (v.is_null()) return "";
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number()) return format_number(v.get<double>());
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

// Samples [0, hi] with `step`, always including both ends.
std::vector<double> samples(double hi, double step) {
  std::vector<double> out;
  const auto n = static_cast<long>(std::floor(hi / step + 1e-9));
  for (long i = 0; i <= n; ++i) out.push_back(step * static_cast<double>(i));
  if (hi - out.back() > 1e-9) out.push_back(hi);
  return out;
}

std::string record_csv(const ResultRecord& r) {
  const Json& o = r.outputs;
  if (r.command == "grasp") {
    CsvWriter w({"finger", "level", "mode", "penetration_mm", "bend_angle_deg", "normal_force_n",
                 "inclination_deg", "height_mm", "overcompressed", "overfolded"});
    for (const auto& c : o.at("contacts")) {
      w.row({cell(c["finger"]), cell(c["level"]), cell(c["mode"]), cell(c["penetration"]),
             cell(c["bend_angle"]), cell(c["normal_force"]), cell(c["inclination"]),
             cell(c["height"]), cell(c["overcompressed"]), cell(c["overfolded"])});
    }
    return w.str();
  }
  if (r.command == "pullout") {
    CsvWriter w({"lift_mm", "force_n", "top_contacts", "bottom_contacts"});
    for (const auto& p : o.at("trace")) {
      w.row({cell(p["lift"]), cell(p["force"]), cell(p["top_contacts"]),
             cell(p["bottom_contacts"])});
    }
    return w.str();
  }
  if (r.command == "multi") {
    CsvWriter w({"stage", "theta_deg", "top_held", "bottom_held"});
    if (o.contains("simulation")) {
      const char* names[] = {"grasp", "release_bottom", "release_top"};
      int i = 0;
      for (const auto& s : o["simulation"]["stages"]) {
        w.row({names[i++], cell(s["theta"]), cell(s["top_held"]), cell(s["bottom_held"])});
      }
    }
    return w.str();
  }
  if (r.command == "compare") {
    CsvWriter w({"strategy", "distance_mm", "time_s"});
    if (o.contains("sequential")) {
      w.row({"sequential", cell(o["sequential"]["distance"]), cell(o["sequential"]["time"])});
      w.row({"multi_object", cell(o["multi"]["distance"]), cell(o["multi"]["time"])});
      w.row({"reduction_pct", cell(o["distance_reduction"]), cell(o["time_reduction"])});
    }
    return w.str();
  }
  throw DomainError(fmt::format("no CSV layout for command '{}'", r.command));
}

// Scalar top-level outputs, used for sweep tables.
std::vector<std::string> scalar_keys(const Json& outputs) {
  std::vector<std::string> keys;
  for (const auto& [k, v] : outputs.items()) {
    if (v.is_primitive()) keys.push_back(k);
  }
  return keys;
}

}  // namespace

Format format_from_string(std::string_view name) {
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  throw DomainError(fmt::format("unknown format '{}' (csv or json)", name));
}

std::string render_kinematics(const GripperConfig& config, double step_deg, Format format) {
  if (!(step_deg > 0.0)) throw DomainError("angle step must be > 0");
  config.validate();
  const auto& law = config.law;
  CsvWriter w({"theta_deg", "finger_radius_mm", "opening_mm"});
  Json rows = Json::array();
  for (double t : samples(law.theta_max - law.theta_min, step_deg)) {
    const double theta = law.theta_min + t;
    const double r = finger_radius(theta, law);
    const double o = opening(theta, config);
    w.row({format_number(theta), format_number(r), format_number(o)});
    rows.push_back(Json{{"theta", round_sig(theta)},
                        {"finger_radius", round_sig(r)},
                        {"opening", round_sig(o)}});
  }
  return format == Format::Csv ? w.str() : dump(rows);
}

std::string render_material_curve(const MaterialModel& material, double strain_step,
                                  double angle_step, Format format) {
  if (!(strain_step > 0.0) || !(angle_step > 0.0)) throw DomainError("curve steps must be > 0");
  material.validate();
  CsvWriter w({"material", "curve", "x", "y", "flag"});
  Json compression = Json::array(), bending = Json::array();
  for (double s : samples(1.2 * material.strain_hi + 0.4, strain_step)) {
    const auto f = compression_force(s, material);
    w.row({material.name, "compression", format_number(s), format_number(f.force),
           f.overcompressed ? "overcompressed" : ""});
    compression.push_back(Json{{"strain", round_sig(s)},
                               {"force", round_sig(f.force)},
                               {"overcompressed", f.overcompressed}});
  }
  for (double a : samples(material.angle_hi + 10.0, angle_step)) {
    const auto t = bending_torque(a, material);
    w.row({material.name, "bending", format_number(a), format_number(t.torque),
           t.overfolded ? "overfolded" : ""});
    bending.push_back(Json{{"angle", round_sig(a)},
                           {"torque", round_sig(t.torque)},
                           {"overfolded", t.overfolded}});
  }
  if (format == Format::Csv) return w.str();
  return dump(Json{{"material", material.name}, {"compression", compression}, {"bending", bending}});
}

std::string render_record(const ResultRecord& record, Format format) {
  return format == Format::Csv ? record_csv(record) : dump(to_json(record));
}

std::string render_sweep(std::string_view axis, std::span<const double> values,
                         std::span<const ResultRecord> records, Format format) {
  if (values.size() != records.size()) throw DomainError("sweep values and records differ in length");
  if (format == Format::Json) {
    Json arr = Json::array();
    for (std::size_t i = 0; i < records.size(); ++i) {
      Json j = to_json(records[i]);
      j["axis"] = std::string(axis);
      j["value"] = round_sig(values[i]);
      arr.push_back(j);
    }
    return dump(arr);
  }
  std::vector<std::string> header{std::string(axis), "command", "inputs_digest"};
  const auto keys = records.empty() ? std::vector<std::string>{} : scalar_keys(records[0].outputs);
  header.insert(header.end(), keys.begin(), keys.end());
  CsvWriter w(header);
  for (std::size_t i = 0; i < records.size(); ++i) {
    std::vector<std::string> row{format_number(values[i]), records[i].command,
                                 records[i].inputs_digest};
    for (const auto& k : keys) {
      row.push_back(records[i].outputs.contains(k) ? cell(records[i].outputs[k]) : "");
    }
    w.row(row);
  }
  return w.str();
}

std::string render_waypoints(const Trajectory& sequential, const Trajectory& multi) {
  CsvWriter w({"strategy", "index", "x_mm", "y_mm", "z_mm", "time_s", "action"});
  for (const auto& [name, t] : {std::pair{"sequential", &sequential}, std::pair{"multi_object", &multi}}) {
    for (std::size_t i = 0; i < t->waypoints.size(); ++i) {
      const auto& p = t->waypoints[i];
      w.row({name, std::to_string(i), format_number(p.position.x()), format_number(p.position.y()),
             format_number(p.position.z()), format_number(p.time),
             std::string(to_string(p.action))});
    }
  }
  return w.str();
}

std::string render_demo_suite(Format format) {
  std::string out;
  for (const auto& m : builtin_materials()) {
    out += render_material_curve(m, 0.05, 1.0, format);
  }
  const auto library = builtin_material_library();
  for (const auto& name : demo_scene_names()) {
    out += fmt::format("# {}\n", name);
    out += render_record(evaluate(demo_scene(name), library), format);
  }
  return out;
}

}  // namespace origrip
