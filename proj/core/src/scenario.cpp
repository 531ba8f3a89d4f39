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

#include "origrip/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <initializer_list>
#include <optional>
#include <set>
#include <sstream>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

namespace origrip {

namespace detail {
const std::vector<std::pair<std::string_view, std::string_view>>& embedded_scenes();
}  // namespace detail

namespace {

using In = nlohmann::json;
using Out = nlohmann::ordered_json;

std::string join_messages(const std::vector<ValidationIssue>& issues) {
  std::string out = "invalid scenario:";
  for (const auto& i : issues) {
    out += fmt::format("\n  {}: {}", i.path.empty() ? "(document)" : i.path, i.message);
  }
  return out;
}

enum class Bound { Any, Positive, NonNegative };

// Collects every problem in a document instead of stopping at the first.
class Checker {
 public:
  std::vector<ValidationIssue> issues;

  void add(std::string path, std::string message) {
    issues.push_back({std::move(path), std::move(message)});
  }

  static std::string at(std::string_view path, std::string_view key) {
    return path.empty() ? std::string(key) : fmt::format("{}.{}", path, key);
  }

  bool object(const In& j, const std::string& path) {
    if (j.is_object()) return true;
    add(path, "expected an object");
    return false;
  }

  void known_keys(const In& j, const std::string& path,
                  std::initializer_list<std::string_view> allowed) {
    for (const auto& [key, _] : j.items()) {
      if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
        add(at(path, key), "unknown field");
      }
    }
  }

  const In* field(const In& j, const std::string& path, std::string_view key, bool required) {
    const auto it = j.find(std::string(key));
    if (it == j.end()) {
      if (required) add(at(path, key), "required field is missing");
      return nullptr;
    }
    return &*it;
  }

  std::optional<double> number(const In& j, const std::string& path, std::string_view key,
                               bool required, Bound bound = Bound::Any) {
    const In* v = field(j, path, key, required);
    if (!v) return std::nullopt;
    return number_value(*v, at(path, key), bound);
  }

  std::optional<double> number_value(const In& v, const std::string& path, Bound bound) {
    if (!v.is_number()) {
      add(path, "expected a number");
      return std::nullopt;
    }
    const double x = v.get<double>();
    if (!std::isfinite(x)) {
      add(path, "must be finite");
      return std::nullopt;
    }
    if (bound == Bound::Positive && !(x > 0.0)) {
      add(path, fmt::format("must be > 0, got {}", x));
      return std::nullopt;
    }
    if (bound == Bound::NonNegative && !(x >= 0.0)) {
      add(path, fmt::format("must be >= 0, got {}", x));
      return std::nullopt;
    }
    return x;
  }

  std::optional<int> integer(const In& j, const std::string& path, std::string_view key,
                             bool required) {
    const In* v = field(j, path, key, required);
    if (!v) return std::nullopt;
    if (!v->is_number_integer()) {
      add(at(path, key), "expected an integer");
      return std::nullopt;
    }
    return v->get<int>();
  }

  std::optional<std::string> string(const In& j, const std::string& path, std::string_view key,
                                    bool required) {
    const In* v = field(j, path, key, required);
    if (!v) return std::nullopt;
    if (!v->is_string()) {
      add(at(path, key), "expected a string");
      return std::nullopt;
    }
    return v->get<std::string>();
  }

  std::optional<std::vector<double>> numbers(const In& j, const std::string& path,
                                             std::string_view key, bool required,
                                             Bound bound = Bound::Any) {
    const In* v = field(j, path, key, required);
    if (!v) return std::nullopt;
    const std::string p = at(path, key);
    if (!v->is_array()) {
      add(p, "expected an array of numbers");
      return std::nullopt;
    }
    std::vector<double> out;
    bool ok = true;
    for (std::size_t i = 0; i < v->size(); ++i) {
      const auto x = number_value((*v)[i], fmt::format("{}[{}]", p, i), bound);
      if (x) out.push_back(*x);
      else ok = false;
    }
    if (!ok) return std::nullopt;
    return out;
  }

  std::optional<Eigen::Vector2d> point(const In& j, const std::string& path, std::string_view key,
                                       bool required) {
    const auto xs = numbers(j, path, key, required);
    if (!xs) return std::nullopt;
    if (xs->size() != 2) {
      add(at(path, key), "expected [x, y]");
      return std::nullopt;
    }
    return Eigen::Vector2d((*xs)[0], (*xs)[1]);
  }

  template <typename F>
  void guard(const std::string& path, F&& f) {
    try {
      f();
    } catch (const DomainError& e) {
      add(path, e.what());
    }
  }
};

template <typename T>
void assign(T& target, const std::optional<T>& v) {
  if (v) target = *v;
}

GripperConfig parse_gripper(const In& j, Checker& c) {
  const std::string p = "gripper";
  GripperConfig g;
  if (!c.object(j, p)) return g;
  c.known_keys(j, p,
               {"finger_count", "transmission", "module_offset", "module_levels", "face_span",
                "panel_span", "rest_depth", "curvature_threshold", "lever_arm"});
  const std::size_t before = c.issues.size();
  if (const auto n = c.integer(j, p, "finger_count", true)) {
    if (*n != 2 && *n != 4) c.add(Checker::at(p, "finger_count"), fmt::format("must be 2 or 4, got {}", *n));
    g.finger_count = *n;
  }
  if (const In* t = c.field(j, p, "transmission", false)) {
    const std::string tp = Checker::at(p, "transmission");
    if (c.object(*t, tp)) {
      c.known_keys(*t, tp, {"r0", "slope", "theta_min", "theta_max"});
      assign(g.law.r0, c.number(*t, tp, "r0", false, Bound::Positive));
      assign(g.law.slope, c.number(*t, tp, "slope", false, Bound::Positive));
      assign(g.law.theta_min, c.number(*t, tp, "theta_min", false));
      assign(g.law.theta_max, c.number(*t, tp, "theta_max", false));
    }
  }
  assign(g.module_offset, c.number(j, p, "module_offset", false, Bound::NonNegative));
  assign(g.module_levels, c.numbers(j, p, "module_levels", false));
  assign(g.face_span, c.number(j, p, "face_span", false, Bound::Positive));
  assign(g.panel_span, c.number(j, p, "panel_span", false, Bound::Positive));
  assign(g.rest_depth, c.number(j, p, "rest_depth", false, Bound::Positive));
  assign(g.curvature_threshold, c.number(j, p, "curvature_threshold", false, Bound::Positive));
  assign(g.lever_arm, c.number(j, p, "lever_arm", false, Bound::Positive));
  if (c.issues.size() == before) c.guard(p, [&] { g.validate(); });
  return g;
}

MaterialModel parse_material(const In& j, const std::string& name, const std::string& p,
                             Checker& c) {
  MaterialModel m;
  m.name = name;
  if (!c.object(j, p)) return m;
  c.known_keys(j, p,
               {"plateau_force", "force_band", "strain_lo", "strain_hi", "plateau_torque",
                "torque_band", "angle_lo", "angle_hi", "overload_stiffness"});
  const std::size_t before = c.issues.size();
  assign(m.plateau_force, c.number(j, p, "plateau_force", true, Bound::Positive));
  assign(m.force_band, c.number(j, p, "force_band", false, Bound::NonNegative));
  assign(m.strain_lo, c.number(j, p, "strain_lo", false, Bound::Positive));
  assign(m.strain_hi, c.number(j, p, "strain_hi", false, Bound::Positive));
  assign(m.plateau_torque, c.number(j, p, "plateau_torque", true, Bound::Positive));
  assign(m.torque_band, c.number(j, p, "torque_band", false, Bound::NonNegative));
  assign(m.angle_lo, c.number(j, p, "angle_lo", false, Bound::Positive));
  assign(m.angle_hi, c.number(j, p, "angle_hi", false, Bound::Positive));
  const auto k = c.number(j, p, "overload_stiffness", false, Bound::NonNegative);
  m.overload_stiffness = k ? *k : default_overload_stiffness(m.plateau_force, m.strain_lo);
  if (c.issues.size() == before) c.guard(p, [&] { m.validate(); });
  return m;
}

MaterialLibrary parse_materials(const In& j, const std::string& p, Checker& c) {
  MaterialLibrary lib;
  if (!c.object(j, p)) return lib;
  for (const auto& [name, body] : j.items()) {
    lib.emplace(name, parse_material(body, name, Checker::at(p, name), c));
  }
  return lib;
}

ObjectShape parse_object(const In& j, const std::string& p, Checker& c) {
  ObjectShape o;
  if (!c.object(j, p)) return o;
  c.known_keys(j, p, {"name", "kind", "dims", "mass", "pose"});
  const std::size_t before = c.issues.size();
  assign(o.name, c.string(j, p, "name", true));
  if (const auto k = c.string(j, p, "kind", true)) {
    if (const auto kind = shape_kind_from_string(*k)) {
      o.kind = *kind;
    } else {
      c.add(Checker::at(p, "kind"),
            fmt::format("unknown shape '{}' (sphere, cube, cuboid, cylinder, curved_block)", *k));
    }
  }
  assign(o.dims, c.numbers(j, p, "dims", true, Bound::Positive));
  assign(o.mass, c.number(j, p, "mass", false, Bound::NonNegative));
  if (const In* pose = c.field(j, p, "pose", false)) {
    const std::string pp = Checker::at(p, "pose");
    if (c.object(*pose, pp)) {
      c.known_keys(*pose, pp, {"x", "y", "yaw", "base_z", "stack_level"});
      assign(o.pose.x, c.number(*pose, pp, "x", false));
      assign(o.pose.y, c.number(*pose, pp, "y", false));
      assign(o.pose.yaw, c.number(*pose, pp, "yaw", false));
      assign(o.pose.base_z, c.number(*pose, pp, "base_z", false));
      if (const auto lvl = c.integer(*pose, pp, "stack_level", false)) {
        if (*lvl < 0) c.add(Checker::at(pp, "stack_level"), "must be >= 0");
        o.pose.stack_level = *lvl;
      }
    }
  }
  if (c.issues.size() == before) c.guard(p, [&] { o.validate(); });
  return o;
}

Environment parse_environment(const In& j, Checker& c) {
  const std::string p = "environment";
  Environment e;
  if (!c.object(j, p)) return e;
  c.known_keys(j, p, {"mu", "gravity", "torque_unit_scale"});
  assign(e.mu, c.number(j, p, "mu", true, Bound::NonNegative));
  assign(e.gravity, c.number(j, p, "gravity", false, Bound::NonNegative));
  assign(e.torque_unit_scale, c.number(j, p, "torque_unit_scale", false, Bound::Positive));
  return e;
}

StackedParams parse_stack_fields(const In& j, const std::string& p, Checker& c) {
  StackedParams s;
  assign(s.top, c.string(j, p, "top", true));
  assign(s.bottom, c.string(j, p, "bottom", true));
  assign(s.material, c.string(j, p, "material", true));
  assign(s.stack_gap, c.number(j, p, "stack_gap", false, Bound::NonNegative));
  assign(s.safety, c.number(j, p, "safety", false, Bound::Positive));
  return s;
}

SceneParams parse_scene(const In& j, std::optional<SceneKind> kind, Checker& c) {
  const std::string p = "scene";
  if (!c.object(j, p)) return SingleGraspParams{};
  if (!kind) {
    c.add(p, "cannot be checked without a valid kind");
    return SingleGraspParams{};
  }
  switch (*kind) {
    case SceneKind::SingleGrasp: {
      c.known_keys(j, p, {"object", "theta", "material"});
      SingleGraspParams s;
      assign(s.object, c.string(j, p, "object", true));
      assign(s.theta, c.number(j, p, "theta", true));
      assign(s.material, c.string(j, p, "material", true));
      return s;
    }
    case SceneKind::Pullout: {
      c.known_keys(j, p, {"object", "theta", "material", "lift_step"});
      PulloutParams s;
      assign(s.object, c.string(j, p, "object", true));
      assign(s.theta, c.number(j, p, "theta", true));
      assign(s.material, c.string(j, p, "material", true));
      assign(s.lift_step, c.number(j, p, "lift_step", false, Bound::Positive));
      return s;
    }
    case SceneKind::Stacked: {
      c.known_keys(j, p, {"top", "bottom", "material", "stack_gap", "safety"});
      return parse_stack_fields(j, p, c);
    }
    case SceneKind::PickPlace: {
      c.known_keys(j, p,
                   {"top", "bottom", "material", "stack_gap", "safety", "pick", "place_bottom",
                    "place_top", "approach_height", "descend_speed", "travel_speed",
                    "grasp_dwell", "release_dwell"});
      PickPlaceParams s;
      s.stack = parse_stack_fields(j, p, c);
      auto& l = s.layout;
      assign(l.pick, c.point(j, p, "pick", true));
      assign(l.place_bottom, c.point(j, p, "place_bottom", true));
      assign(l.place_top, c.point(j, p, "place_top", true));
      assign(l.approach_height, c.number(j, p, "approach_height", false, Bound::Positive));
      assign(l.descend_speed, c.number(j, p, "descend_speed", false, Bound::Positive));
      assign(l.travel_speed, c.number(j, p, "travel_speed", false, Bound::Positive));
      assign(l.grasp_dwell, c.number(j, p, "grasp_dwell", false, Bound::NonNegative));
      assign(l.release_dwell, c.number(j, p, "release_dwell", false, Bound::NonNegative));
      return s;
    }
  }
  return SingleGraspParams{};
}

constexpr std::array<std::pair<SceneKind, std::string_view>, 4> kSceneKinds{{
    {SceneKind::SingleGrasp, "single_grasp"},
    {SceneKind::Pullout, "pullout"},
    {SceneKind::Stacked, "stacked"},
    {SceneKind::PickPlace, "pick_place"},
}};

std::optional<SceneKind> scene_kind_from_string(std::string_view s) {
  for (const auto& [k, n] : kSceneKinds) {
    if (n == s) return k;
  }
  return std::nullopt;
}

// Names the scene refers to, paired with the field that holds them.
struct References {
  std::vector<std::pair<std::string, std::string>> objects;
  std::string material;
  std::optional<double> theta;
};

References references(const SceneParams& params) {
  return std::visit(
      [](const auto& s) -> References {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, SingleGraspParams> || std::is_same_v<T, PulloutParams>) {
          return {{{"scene.object", s.object}}, s.material, s.theta};
        } else if constexpr (std::is_same_v<T, StackedParams>) {
          return {{{"scene.top", s.top}, {"scene.bottom", s.bottom}}, s.material, std::nullopt};
        } else {
          return {{{"scene.top", s.stack.top}, {"scene.bottom", s.stack.bottom}},
                  s.stack.material,
                  std::nullopt};
        }
      },
      params);
}

Out material_json(const MaterialModel& m) {
  Out j;
  j["plateau_force"] = m.plateau_force;
  j["force_band"] = m.force_band;
  j["strain_lo"] = m.strain_lo;
  j["strain_hi"] = m.strain_hi;
  j["plateau_torque"] = m.plateau_torque;
  j["torque_band"] = m.torque_band;
  j["angle_lo"] = m.angle_lo;
  j["angle_hi"] = m.angle_hi;
  j["overload_stiffness"] = m.overload_stiffness;
  return j;
}

void stack_json(Out& j, const StackedParams& s) {
  j["top"] = s.top;
  j["bottom"] = s.bottom;
  j["material"] = s.material;
  j["stack_gap"] = s.stack_gap;
  j["safety"] = s.safety;
}

Out point_json(const Eigen::Vector2d& p) { return Out::array({p.x(), p.y()}); }

}  // namespace

ValidationError::ValidationError(std::vector<ValidationIssue> issues)
    : std::runtime_error(join_messages(issues)), issues_(std::move(issues)) {}

std::string_view to_string(SceneKind kind) {
  for (const auto& [k, n] : kSceneKinds) {
    if (k == kind) return n;
  }
  return "unknown";
}

MaterialLibrary builtin_material_library() {
  MaterialLibrary lib;
  for (auto& m : builtin_materials()) lib.emplace(m.name, m);
  return lib;
}

MaterialLibrary parse_material_table(std::string_view text) {
  In j;
  try {
    j = In::parse(text);
  } catch (const In::parse_error& e) {
    throw ValidationError({{"", fmt::format("malformed material table: {}", e.what())}});
  }
  Checker c;
  auto lib = parse_materials(j, "", c);
  if (lib.empty() && c.issues.empty()) c.add("", "material table is empty");
  if (!c.issues.empty()) throw ValidationError(std::move(c.issues));
  return lib;
}

MaterialLibrary default_material_library() {
  const char* path = std::getenv(kMaterialsEnvVar);
  if (!path || !*path) return builtin_material_library();
  std::ifstream in(path);
  if (!in) {
    throw ValidationError({{fmt::format("${}", kMaterialsEnvVar),
                            fmt::format("cannot read material table '{}'", path)}});
  }
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_material_table(ss.str());
}

const ObjectShape& Scenario::object(std::string_view object_name) const {
  for (const auto& o : objects) {
    if (o.name == object_name) return o;
  }
  throw DomainError(fmt::format("no object named '{}'", object_name));
}

MaterialModel Scenario::material(std::string_view material_name,
                                 const MaterialLibrary& library) const {
  if (const auto it = materials.find(material_name); it != materials.end()) return it->second;
  if (const auto it = library.find(material_name); it != library.end()) return it->second;
  throw DomainError(fmt::format("no material named '{}'", material_name));
}

Scenario parse_scenario(std::string_view text, const MaterialLibrary& library) {
  In root = In::object();
  const bool blank = std::all_of(text.begin(), text.end(),
                                 [](char ch) { return std::isspace(static_cast<unsigned char>(ch)); });
  if (!blank) {
    try {
      root = In::parse(text);
    } catch (const In::parse_error& e) {
      throw ValidationError({{"", fmt::format("malformed document: {}", e.what())}});
    }
  }
  Checker c;
  Scenario s;
  if (!c.object(root, "")) throw ValidationError(std::move(c.issues));
  c.known_keys(root, "",
               {"name", "kind", "gripper", "materials", "objects", "environment", "scene"});

  assign(s.name, c.string(root, "", "name", false));
  std::optional<SceneKind> kind;
  if (const auto k = c.string(root, "", "kind", true)) {
    kind = scene_kind_from_string(*k);
    if (kind) s.kind = *kind;
    else c.add("kind", fmt::format("unknown kind '{}' (single_grasp, pullout, stacked, pick_place)", *k));
  }
  const std::size_t before_gripper = c.issues.size();
  if (const In* g = c.field(root, "", "gripper", true)) s.gripper = parse_gripper(*g, c);
  const bool gripper_ok = c.issues.size() == before_gripper && root.contains("gripper");
  if (const In* m = c.field(root, "", "materials", false)) s.materials = parse_materials(*m, "materials", c);
  if (const In* objs = c.field(root, "", "objects", true)) {
    if (!objs->is_array()) {
      c.add("objects", "expected an array");
    } else if (objs->empty()) {
      c.add("objects", "at least one object is required");
    } else {
      std::set<std::string> seen;
      for (std::size_t i = 0; i < objs->size(); ++i) {
        const std::string p = fmt::format("objects[{}]", i);
        auto o = parse_object((*objs)[i], p, c);
        if (!o.name.empty() && !seen.insert(o.name).second) {
          c.add(Checker::at(p, "name"), fmt::format("duplicate object name '{}'", o.name));
        }
        s.objects.push_back(std::move(o));
      }
    }
  }
  if (const In* e = c.field(root, "", "environment", true)) s.environment = parse_environment(*e, c);
  if (const In* sc = c.field(root, "", "scene", true)) {
    const std::size_t before_scene = c.issues.size();
    s.params = parse_scene(*sc, kind, c);
    if (c.issues.size() == before_scene) {
      const auto refs = references(s.params);
      for (const auto& [path, name] : refs.objects) {
        const bool found = std::any_of(s.objects.begin(), s.objects.end(),
                                       [&](const ObjectShape& o) { return o.name == name; });
        if (!found) c.add(path, fmt::format("no object named '{}'", name));
      }
      if (!s.materials.contains(refs.material) && !library.contains(refs.material)) {
        c.add("scene.material", fmt::format("material '{}' is not defined", refs.material));
      }
      if (refs.theta && gripper_ok &&
          (*refs.theta < s.gripper.law.theta_min || *refs.theta > s.gripper.law.theta_max)) {
        c.add("scene.theta", fmt::format("must lie in [{}, {}] deg", s.gripper.law.theta_min,
                                         s.gripper.law.theta_max));
      }
    }
  }
  if (!c.issues.empty()) throw ValidationError(std::move(c.issues));
  return s;
}

std::string serialize_scenario(const Scenario& s) {
  Out j;
  j["name"] = s.name;
  j["kind"] = std::string(to_string(s.kind));

  Out g;
  g["finger_count"] = s.gripper.finger_count;
  g["transmission"] = Out{{"r0", s.gripper.law.r0},
                          {"slope", s.gripper.law.slope},
                          {"theta_min", s.gripper.law.theta_min},
                          {"theta_max", s.gripper.law.theta_max}};
  g["module_offset"] = s.gripper.module_offset;
  g["module_levels"] = s.gripper.module_levels;
  g["face_span"] = s.gripper.face_span;
  g["panel_span"] = s.gripper.panel_span;
  g["rest_depth"] = s.gripper.rest_depth;
  g["curvature_threshold"] = s.gripper.curvature_threshold;
  g["lever_arm"] = s.gripper.lever_arm;
  j["gripper"] = g;

  Out mats = Out::object();
  for (const auto& [name, m] : s.materials) mats[name] = material_json(m);
  j["materials"] = mats;

  Out objs = Out::array();
  for (const auto& o : s.objects) {
    Out oj;
    oj["name"] = o.name;
    oj["kind"] = std::string(to_string(o.kind));
    oj["dims"] = o.dims;
    oj["mass"] = o.mass;
    oj["pose"] = Out{{"x", o.pose.x},
                     {"y", o.pose.y},
                     {"yaw", o.pose.yaw},
                     {"base_z", o.pose.base_z},
                     {"stack_level", o.pose.stack_level}};
    objs.push_back(oj);
  }
  j["objects"] = objs;
  j["environment"] = Out{{"mu", s.environment.mu},
                         {"gravity", s.environment.gravity},
                         {"torque_unit_scale", s.environment.torque_unit_scale}};

  Out sc;
  std::visit(
      [&](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, SingleGraspParams>) {
          sc["object"] = p.object;
          sc["theta"] = p.theta;
          sc["material"] = p.material;
        } else if constexpr (std::is_same_v<T, PulloutParams>) {
          sc["object"] = p.object;
          sc["theta"] = p.theta;
          sc["material"] = p.material;
          sc["lift_step"] = p.lift_step;
        } else if constexpr (std::is_same_v<T, StackedParams>) {
          stack_json(sc, p);
        } else {
          stack_json(sc, p.stack);
          sc["pick"] = point_json(p.layout.pick);
          sc["place_bottom"] = point_json(p.layout.place_bottom);
          sc["place_top"] = point_json(p.layout.place_top);
          sc["approach_height"] = p.layout.approach_height;
          sc["descend_speed"] = p.layout.descend_speed;
          sc["travel_speed"] = p.layout.travel_speed;
          sc["grasp_dwell"] = p.layout.grasp_dwell;
          sc["release_dwell"] = p.layout.release_dwell;
        }
      },
      s.params);
  j["scene"] = sc;
  return j.dump(2) + "\n";
}

std::vector<std::string> demo_scene_names() {
  std::vector<std::string> out;
  for (const auto& [name, _] : detail::embedded_scenes()) out.emplace_back(name);
  return out;
}

std::string_view demo_scene_text(std::string_view name) {
  for (const auto& [n, text] : detail::embedded_scenes()) {
    if (n == name) return text;
  }
  throw DomainError(fmt::format("no demo scene named '{}'", name));
}

Scenario demo_scene(std::string_view name) {
  return parse_scenario(demo_scene_text(name), builtin_material_library());
}

StackedScene stacked_scene(const Scenario& scenario, const MaterialLibrary& library) {
  const StackedParams* p = nullptr;
  if (const auto* s = std::get_if<StackedParams>(&scenario.params)) p = s;
  if (const auto* pp = std::get_if<PickPlaceParams>(&scenario.params)) p = &pp->stack;
  if (!p) throw DomainError("scenario does not describe a stacked grasp");
  StackedScene out;
  out.top = scenario.object(p->top);
  out.bottom = scenario.object(p->bottom);
  out.stack_gap = p->stack_gap;
  out.gripper = scenario.gripper;
  out.material = scenario.material(p->material, library);
  out.mu = scenario.environment.mu;
  out.gravity = scenario.environment.gravity;
  out.safety = p->safety;
  out.torque_unit_scale = scenario.environment.torque_unit_scale;
  return out;
}

}  // namespace origrip
