#pragma once

// JSON front end: parse shape descriptions, serialize bound reports.
//
// A shape file is an object with
//   kind      one of disk, ellipse, regular_polygon, rectangle, triangle,
//             rhombus, polygon, cupids_bow, double_stadium, octagon
//   params    object of named numbers, kind specific
//   vertices  array of [x, y] pairs (triangle and polygon kinds)
//   center    [x, y] choice of star center (kinds with a free center)
//   center_rule  "barycenter" or "incenter" (triangle only)
//   options   { "grid": int, "tol": number } overrides
//
// Infinities are serialized as the string "inf" since JSON has no literal
// for them.

#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "infsup/bounds.hpp"
#include "infsup/shapes.hpp"

namespace infsup {

using nlohmann::json;

namespace detail {

[[noreturn]] inline void bad_field(const std::string& where,
                                   const std::string& what) {
  throw StructureError("shape file: field '" + where + "': " + what);
}

inline double get_number(const json& j, const std::string& where) {
  if (!j.is_number()) bad_field(where, "expected a number");
  return j.get<double>();
}

inline double param_number(const json& params, const std::string& name,
                           std::optional<double> fallback = std::nullopt) {
  if (!params.contains(name)) {
    if (fallback) return *fallback;
    bad_field("params." + name, "missing");
  }
  return get_number(params.at(name), "params." + name);
}

inline Vec2 get_point(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2)
    bad_field(where, "expected a pair [x, y]");
  return {get_number(j[0], where + "[0]"), get_number(j[1], where + "[1]")};
}

inline std::vector<Vec2> get_points(const json& j, const std::string& where) {
  if (!j.is_array()) bad_field(where, "expected an array of [x, y] pairs");
  std::vector<Vec2> pts;
  pts.reserve(j.size());
  for (size_t i = 0; i < j.size(); ++i)
    pts.push_back(get_point(j[i], where + "[" + std::to_string(i) + "]"));
  return pts;
}

inline std::optional<Vec2> opt_center(const json& root) {
  if (!root.contains("center")) return std::nullopt;
  return get_point(root.at("center"), "center");
}

inline void reject_center(const json& root, const std::string& kind) {
  if (root.contains("center"))
    bad_field("center", "not supported for kind '" + kind +
                            "' (its center is fixed by symmetry)");
}

}  // namespace detail

inline ShapeSpec parse_shape(const json& root) {
  using namespace detail;
  if (!root.is_object()) throw StructureError("shape file: expected an object");
  if (!root.contains("kind")) bad_field("kind", "missing");
  if (!root.at("kind").is_string()) bad_field("kind", "expected a string");
  const std::string kind = root.at("kind").get<std::string>();
  const json params = root.value("params", json::object());
  if (!params.is_object()) bad_field("params", "expected an object");

  if (kind == "disk") {
    DiskSpec s;
    s.radius = param_number(params, "radius", 1.0);
    s.star_center = opt_center(root).value_or(Vec2{0.0, 0.0});
    return s;
  }
  if (kind == "ellipse") {
    reject_center(root, kind);
    return EllipseSpec{param_number(params, "a"), param_number(params, "b")};
  }
  if (kind == "regular_polygon") {
    RegularPolygonSpec s;
    const double n = param_number(params, "sides");
    if (n != std::floor(n)) bad_field("params.sides", "expected an integer");
    s.sides = static_cast<int>(n);
    s.circumradius = param_number(params, "circumradius", 1.0);
    s.star_center = opt_center(root);
    return s;
  }
  if (kind == "rectangle") {
    RectangleSpec s;
    s.width = param_number(params, "width");
    s.height = param_number(params, "height");
    s.star_center = opt_center(root);
    return s;
  }
  if (kind == "triangle") {
    const auto pts = get_points(root.value("vertices", json::array()), "vertices");
    if (pts.size() != 3) bad_field("vertices", "expected exactly 3 points");
    TriangleSpec s;
    s.p1 = pts[0];
    s.p2 = pts[1];
    s.p3 = pts[2];
    if (root.contains("center_rule")) {
      const json& cr = root.at("center_rule");
      if (!cr.is_string()) bad_field("center_rule", "expected a string");
      const std::string rule = cr.get<std::string>();
      if (rule == "barycenter")
        s.center_rule = TriangleCenter::Barycenter;
      else if (rule == "incenter")
        s.center_rule = TriangleCenter::Incenter;
      else
        bad_field("center_rule", "expected 'barycenter' or 'incenter'");
    }
    s.star_center = opt_center(root);
    return s;
  }
  if (kind == "rhombus") {
    RhombusSpec s;
    s.diag_x = param_number(params, "diag_x");
    s.diag_y = param_number(params, "diag_y");
    s.star_center = opt_center(root);
    return s;
  }
  if (kind == "polygon") {
    GeneralPolygonSpec s;
    s.vertices = get_points(root.value("vertices", json::array()), "vertices");
    if (s.vertices.size() < 3) bad_field("vertices", "expected at least 3 points");
    if (auto c = opt_center(root); c) {
      s.star_center = *c;
    } else {
      Vec2 mean{0.0, 0.0};
      for (const auto& v : s.vertices) mean = mean + v;
      s.star_center = mean / static_cast<double>(s.vertices.size());
    }
    return s;
  }
  if (kind == "cupids_bow") {
    reject_center(root, kind);
    return CupidsBowSpec{param_number(params, "c")};
  }
  if (kind == "double_stadium") {
    reject_center(root, kind);
    return DoubleStadiumSpec{param_number(params, "eps")};
  }
  if (kind == "octagon") {
    reject_center(root, kind);
    return OctagonSpec{param_number(params, "q")};
  }
  bad_field("kind", "unknown kind '" + kind + "'");
}

inline ShapeSpec parse_shape_text(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw StructureError(std::string("shape file: ") + e.what());
  }
  return parse_shape(root);
}

inline ShapeSpec load_shape(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw StructureError("shape file: cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_shape_text(buf.str());
}

// Merge "options" from the shape file over base settings.
inline Options parse_options(const json& root, Options base = {}) {
  using namespace detail;
  if (!root.contains("options")) return base;
  const json& o = root.at("options");
  if (!o.is_object()) bad_field("options", "expected an object");
  if (o.contains("grid")) {
    const double g = get_number(o.at("grid"), "options.grid");
    if (g != std::floor(g) || g < 8)
      bad_field("options.grid", "expected an integer >= 8");
    base.grid_n = static_cast<int>(g);
  }
  if (o.contains("tol")) {
    const double t = get_number(o.at("tol"), "options.tol");
    if (!(t > 0.0) || !(t < 1.0)) bad_field("options.tol", "expected 0 < tol < 1");
    base.tol = t;
  }
  return base;
}

inline Options options_from_text(const std::string& text, Options base = {}) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw StructureError(std::string("shape file: ") + e.what());
  }
  return parse_options(root, base);
}

// JSON has no infinity literal; use the string "inf".
inline json json_number(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

inline double number_from_json(const json& j) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    throw StructureError("report: expected a number or 'inf', got '" + s + "'");
  }
  if (!j.is_number()) throw StructureError("report: expected a number");
  return j.get<double>();
}

inline json report_to_json(const BoundReport& r) {
  json out;
  out["omega_hp"] = json_number(r.omega_hp);
  out["m"] = json_number(r.m);
  out["M"] = json_number(r.M);
  out["alpha_star"] = json_number(r.alpha_star);
  out["rho_max"] = json_number(r.rho_max);
  out["r_min"] = json_number(r.r_min);
  out["normalization_scale"] = json_number(r.normalization_scale);
  out["tau"] = json_number(r.tau);
  out["psi"] = json_number(r.psi);
  out["m_tau"] = json_number(r.m_tau);
  out["beta_lower_proven"] = json_number(r.beta_lower_proven);
  out["beta_lower_hp_claimed"] = json_number(r.beta_lower_hp_claimed);
  out["beta_lower_radii"] = json_number(r.beta_lower_radii);
  if (r.beta_upper) out["beta_upper"] = json_number(*r.beta_upper);
  out["c_upper_proven"] = json_number(r.c_upper_proven);
  out["gamma_upper_proven"] = json_number(r.gamma_upper_proven);
  out["k_upper_smooth_only"] = json_number(r.k_upper_smooth_only);
  out["alpha_at_boundary"] = r.alpha_at_boundary;
  out["degenerate"] = r.degenerate;
  json prov = json::object();
  for (const auto& [key, tag] : r.provenance) prov[key] = tag;
  out["provenance"] = prov;
  return out;
}

inline BoundReport report_from_json(const json& in) {
  BoundReport r;
  r.omega_hp = number_from_json(in.at("omega_hp"));
  r.m = number_from_json(in.at("m"));
  r.M = number_from_json(in.at("M"));
  r.alpha_star = number_from_json(in.at("alpha_star"));
  r.rho_max = number_from_json(in.at("rho_max"));
  r.r_min = number_from_json(in.at("r_min"));
  r.normalization_scale = number_from_json(in.at("normalization_scale"));
  r.tau = number_from_json(in.at("tau"));
  r.psi = number_from_json(in.at("psi"));
  r.m_tau = number_from_json(in.at("m_tau"));
  r.beta_lower_proven = number_from_json(in.at("beta_lower_proven"));
  r.beta_lower_hp_claimed = number_from_json(in.at("beta_lower_hp_claimed"));
  r.beta_lower_radii = number_from_json(in.at("beta_lower_radii"));
  if (in.contains("beta_upper"))
    r.beta_upper = number_from_json(in.at("beta_upper"));
  r.c_upper_proven = number_from_json(in.at("c_upper_proven"));
  r.gamma_upper_proven = number_from_json(in.at("gamma_upper_proven"));
  r.k_upper_smooth_only = number_from_json(in.at("k_upper_smooth_only"));
  r.alpha_at_boundary = in.at("alpha_at_boundary").get<bool>();
  r.degenerate = in.at("degenerate").get<bool>();
  if (in.contains("provenance"))
    for (const auto& [key, tag] : in.at("provenance").items())
      r.provenance.emplace_back(key, tag.get<std::string>());
  return r;
}

}  // namespace infsup
