#pragma once

#include "fairdisk/instance.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace fairdisk::io {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An instance together with the color names from its document, in
// declaration order (color id == position).
struct NamedInstance {
  Instance instance;
  std::vector<std::string> color_names;
};

// Reads the JSON instance document. Unknown fields, duplicate colors,
// inverted bounds and undeclared point colors are all rejected with a
// ParseError locating the offender.
NamedInstance parse_instance(const std::string& text);

// Inverse of parse_instance; coordinates carry 12 significant digits.
std::string emit_instance(const NamedInstance& ni);

enum class Status { optimal, heuristic, infeasible };

std::string status_name(Status s);

struct SolverInfo {
  std::string mode;
  double elapsed_seconds = 0.0;
  std::uint64_t radius_count = 0;
  std::uint64_t radii_probed = 0;
  std::uint64_t subsets_checked = 0;
};

struct ResultDocument {
  Status status = Status::infeasible;
  Clustering clustering;  // meaningful iff status != infeasible
  SolverInfo solver;
};

std::string emit_result(const ResultDocument& doc);
ResultDocument parse_result(const std::string& text);

// Deterministic SVG rendering: one outline circle per cluster, one filled
// dot per point in its declared color. Infeasible results render the points
// with a caption and no disks.
std::string render_svg(const NamedInstance& ni, const ResultDocument& doc);

// Nearest double to v printed with 12 significant digits.
double round_sig12(double v);

}  // namespace fairdisk::io
