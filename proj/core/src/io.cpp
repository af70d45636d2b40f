#include "fairdisk/io.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <unordered_map>

namespace fairdisk::io {

using nlohmann::ordered_json;

double round_sig12(double v) {
  if (v == 0.0 || !std::isfinite(v)) return v == 0.0 ? 0.0 : v;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::strtod(buf, nullptr);
}

std::string status_name(Status s) {
  switch (s) {
    case Status::optimal:
      return "optimal";
    case Status::heuristic:
      return "heuristic";
    default:
      return "infeasible";
  }
}

namespace {

Status status_from_name(const std::string& name) {
  if (name == "optimal") return Status::optimal;
  if (name == "heuristic") return Status::heuristic;
  if (name == "infeasible") return Status::infeasible;
  throw ParseError("unknown status '" + name + "'");
}

ordered_json parse_json(const std::string& text) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("parse error: ") + e.what());
  }
}

void reject_unknown_fields(const ordered_json& obj, const char* where,
                           std::initializer_list<const char*> allowed) {
  for (const auto& item : obj.items()) {
    bool known = false;
    for (const char* a : allowed) {
      if (item.key() == a) {
        known = true;
        break;
      }
    }
    if (!known) {
      throw ParseError(std::string(where) + ": unknown field '" + item.key() + "'");
    }
  }
}

const ordered_json& require_field(const ordered_json& obj, const char* where,
                                  const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw ParseError(std::string(where) + ": missing field '" + key + "'");
  }
  return *it;
}

std::int64_t require_count(const ordered_json& v, const std::string& where) {
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
    throw ParseError(where + " must be a non-negative integer");
  }
  return v.get<std::int64_t>();
}

double require_coordinate(const ordered_json& v, const std::string& where) {
  if (!v.is_number()) throw ParseError(where + " must be a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw ParseError(where + " must be finite");
  return d;
}

}  // namespace

NamedInstance parse_instance(const std::string& text) {
  const ordered_json j = parse_json(text);
  if (!j.is_object()) throw ParseError("instance document must be a JSON object");
  reject_unknown_fields(j, "instance", {"k", "colors", "points"});

  NamedInstance ni;

  const auto& jk = require_field(j, "instance", "k");
  if (!jk.is_number_integer() || jk.get<std::int64_t>() < 1) {
    throw ParseError("k must be an integer >= 1");
  }
  ni.instance.k = jk.get<int>();

  const auto& jcolors = require_field(j, "instance", "colors");
  if (!jcolors.is_array() || jcolors.empty()) {
    throw ParseError("colors must be a non-empty array");
  }
  std::unordered_map<std::string, int> color_ids;
  for (std::size_t i = 0; i < jcolors.size(); ++i) {
    const std::string where = "colors[" + std::to_string(i) + "]";
    const auto& jc = jcolors[i];
    if (!jc.is_object()) throw ParseError(where + " must be an object");
    reject_unknown_fields(jc, where.c_str(), {"name", "lower", "upper"});
    const auto& jname = require_field(jc, where.c_str(), "name");
    if (!jname.is_string() || jname.get<std::string>().empty()) {
      throw ParseError(where + ".name must be a non-empty string");
    }
    const std::string name = jname.get<std::string>();
    if (!color_ids.emplace(name, static_cast<int>(i)).second) {
      throw ParseError(where + ": duplicate color '" + name + "'");
    }
    const std::int64_t lower =
        require_count(require_field(jc, where.c_str(), "lower"), where + ".lower");
    const std::int64_t upper =
        require_count(require_field(jc, where.c_str(), "upper"), where + ".upper");
    if (lower > upper) {
      throw ParseError("color '" + name + "': lower bound " + std::to_string(lower) +
                       " exceeds upper bound " + std::to_string(upper));
    }
    ni.color_names.push_back(name);
    ni.instance.bounds.push_back(ColorBound{lower, upper});
  }

  const auto& jpoints = require_field(j, "instance", "points");
  if (!jpoints.is_array() || jpoints.empty()) {
    throw ParseError("points must be a non-empty array");
  }
  for (std::size_t i = 0; i < jpoints.size(); ++i) {
    const std::string where = "points[" + std::to_string(i) + "]";
    const auto& jp = jpoints[i];
    if (!jp.is_object()) throw ParseError(where + " must be an object");
    reject_unknown_fields(jp, where.c_str(), {"x", "y", "color"});
    geom::Point p;
    p.x = require_coordinate(require_field(jp, where.c_str(), "x"), where + ".x");
    p.y = require_coordinate(require_field(jp, where.c_str(), "y"), where + ".y");
    const auto& jcolor = require_field(jp, where.c_str(), "color");
    if (!jcolor.is_string()) throw ParseError(where + ".color must be a string");
    const auto it = color_ids.find(jcolor.get<std::string>());
    if (it == color_ids.end()) {
      throw ParseError(where + " references undeclared color '" +
                       jcolor.get<std::string>() + "'");
    }
    ni.instance.points.push_back(p);
    ni.instance.colors.push_back(it->second);
  }

  ni.instance.validate();
  return ni;
}

std::string emit_instance(const NamedInstance& ni) {
  ordered_json j;
  j["k"] = ni.instance.k;
  ordered_json colors = ordered_json::array();
  for (std::size_t q = 0; q < ni.color_names.size(); ++q) {
    ordered_json c;
    c["name"] = ni.color_names[q];
    c["lower"] = ni.instance.bounds[q].lower;
    c["upper"] = ni.instance.bounds[q].upper;
    colors.push_back(std::move(c));
  }
  j["colors"] = std::move(colors);
  ordered_json points = ordered_json::array();
  for (std::size_t i = 0; i < ni.instance.size(); ++i) {
    ordered_json p;
    p["x"] = round_sig12(ni.instance.points[i].x);
    p["y"] = round_sig12(ni.instance.points[i].y);
    p["color"] = ni.color_names[ni.instance.colors[i]];
    points.push_back(std::move(p));
  }
  j["points"] = std::move(points);
  return j.dump(2) + "\n";
}

std::string emit_result(const ResultDocument& doc) {
  ordered_json j;
  j["status"] = status_name(doc.status);
  if (doc.status != Status::infeasible) {
    j["radius"] = round_sig12(doc.clustering.radius);
    ordered_json centers = ordered_json::array();
    for (const geom::Point& c : doc.clustering.centers) {
      centers.push_back(ordered_json{{"x", round_sig12(c.x)}, {"y", round_sig12(c.y)}});
    }
    j["centers"] = std::move(centers);
    j["assignment"] = doc.clustering.assignment;
  }
  j["solver"] = ordered_json{{"mode", doc.solver.mode},
                             {"elapsed_seconds", round_sig12(doc.solver.elapsed_seconds)},
                             {"radius_count", doc.solver.radius_count},
                             {"radii_probed", doc.solver.radii_probed},
                             {"subsets_checked", doc.solver.subsets_checked}};
  return j.dump(2) + "\n";
}

ResultDocument parse_result(const std::string& text) {
  const ordered_json j = parse_json(text);
  if (!j.is_object()) throw ParseError("result document must be a JSON object");
  reject_unknown_fields(j, "result",
                        {"status", "radius", "centers", "assignment", "solver"});

  ResultDocument doc;
  const auto& jstatus = require_field(j, "result", "status");
  if (!jstatus.is_string()) throw ParseError("status must be a string");
  doc.status = status_from_name(jstatus.get<std::string>());

  const bool has_solution = doc.status != Status::infeasible;
  if (has_solution != j.contains("radius") || has_solution != j.contains("centers") ||
      has_solution != j.contains("assignment")) {
    throw ParseError("radius, centers and assignment must be present exactly when "
                     "status is not infeasible");
  }
  if (has_solution) {
    doc.clustering.radius = require_coordinate(j["radius"], "radius");
    const auto& jcenters = j["centers"];
    if (!jcenters.is_array()) throw ParseError("centers must be an array");
    for (std::size_t i = 0; i < jcenters.size(); ++i) {
      const std::string where = "centers[" + std::to_string(i) + "]";
      const auto& jc = jcenters[i];
      if (!jc.is_object()) throw ParseError(where + " must be an object");
      reject_unknown_fields(jc, where.c_str(), {"x", "y"});
      geom::Point p;
      p.x = require_coordinate(require_field(jc, where.c_str(), "x"), where + ".x");
      p.y = require_coordinate(require_field(jc, where.c_str(), "y"), where + ".y");
      doc.clustering.centers.push_back(p);
    }
    const auto& jassign = j["assignment"];
    if (!jassign.is_array()) throw ParseError("assignment must be an array");
    for (std::size_t i = 0; i < jassign.size(); ++i) {
      const auto& ja = jassign[i];
      if (!ja.is_number_integer()) {
        throw ParseError("assignment[" + std::to_string(i) + "] must be an integer");
      }
      doc.clustering.assignment.push_back(ja.get<int>());
    }
  }

  if (j.contains("solver")) {
    const auto& js = j["solver"];
    if (!js.is_object()) throw ParseError("solver must be an object");
    reject_unknown_fields(js, "solver",
                          {"mode", "elapsed_seconds", "radius_count", "radii_probed",
                           "subsets_checked"});
    if (js.contains("mode")) doc.solver.mode = js["mode"].get<std::string>();
    if (js.contains("elapsed_seconds")) {
      doc.solver.elapsed_seconds = js["elapsed_seconds"].get<double>();
    }
    if (js.contains("radius_count")) {
      doc.solver.radius_count = js["radius_count"].get<std::uint64_t>();
    }
    if (js.contains("radii_probed")) {
      doc.solver.radii_probed = js["radii_probed"].get<std::uint64_t>();
    }
    if (js.contains("subsets_checked")) {
      doc.solver.subsets_checked = js["subsets_checked"].get<std::uint64_t>();
    }
  }
  return doc;
}

}  // namespace fairdisk::io
