#include "fairdisk/assignment.hpp"

#include <stdexcept>
#include <string>

namespace fairdisk::assignment {

flow::BoundedNetwork build_network(const AssignmentProblem& prob) {
  if (prob.lower < 0 || prob.lower > prob.upper) {
    throw std::invalid_argument("occupancy bounds must satisfy 0 <= lower <= upper");
  }
  const int n = static_cast<int>(prob.points.size());
  const int k = static_cast<int>(prob.disks.size());

  flow::BoundedNetwork net;
  net.node_count = n + k + 2;
  net.source = 0;
  net.sink = n + k + 1;
  const auto point_node = [](int i) { return 1 + i; };
  const auto disk_node = [n](int j) { return 1 + n + j; };

  for (int i = 0; i < n; ++i) {
    net.arcs.push_back({net.source, point_node(i), 1, 1});
  }
  for (int i = 0; i < n; ++i) {
    bool covered = false;
    for (int j = 0; j < k; ++j) {
      if (geom::covers(prob.disks[j], prob.points[i])) {
        net.arcs.push_back({point_node(i), disk_node(j), 0, 1});
        covered = true;
      }
    }
    if (!covered) {
      throw std::invalid_argument("point " + std::to_string(i) +
                                  " is not covered by any disk");
    }
  }
  for (int j = 0; j < k; ++j) {
    net.arcs.push_back({disk_node(j), net.sink, prob.lower, prob.upper});
  }
  return net;
}

std::optional<std::vector<int>> feasible_partition(const AssignmentProblem& prob) {
  const flow::BoundedNetwork net = build_network(prob);
  const flow::FlowResult res = flow::max_flow_with_lower_bounds(net);
  if (!res.feasible) return std::nullopt;

  const int n = static_cast<int>(prob.points.size());
  std::vector<int> assignment(prob.points.size(), -1);
  for (std::size_t a = 0; a < net.arcs.size(); ++a) {
    const flow::Arc& arc = net.arcs[a];
    const bool point_to_disk = arc.from >= 1 && arc.from <= n && arc.to > n;
    if (point_to_disk && res.arc_flow[a] == 1) {
      assignment[arc.from - 1] = arc.to - 1 - n;
    }
  }
  return assignment;
}

std::optional<Clustering> solve_lu_kcenter(std::span<const Point> points, int k,
                                           std::int64_t lower, std::int64_t upper,
                                           const candidates::SearchOptions& opts,
                                           candidates::SearchStats* stats) {
  if (points.empty()) throw std::invalid_argument("solve_lu_kcenter: empty point set");
  if (k < 1) throw std::invalid_argument("solve_lu_kcenter: k must be positive");
  if (lower < 0 || lower > upper) {
    throw std::invalid_argument("solve_lu_kcenter: bounds must satisfy 0 <= lower <= upper");
  }

  // Counting precondition: k clusters of [lower, upper] points each.
  const auto n = static_cast<std::int64_t>(points.size());
  if (static_cast<std::int64_t>(k) * lower > n || n > static_cast<std::int64_t>(k) * upper) {
    return std::nullopt;
  }

  std::vector<Point> pts(points.begin(), points.end());
  auto accept =
      [&](const candidates::CandidateSolution& sol) -> std::optional<Clustering> {
    for (const Point& p : pts) {
      bool covered = false;
      for (const Point& c : sol.centers) {
        if (geom::covers(geom::Disk{c, sol.radius}, p)) {
          covered = true;
          break;
        }
      }
      if (!covered) return std::nullopt;
    }
    AssignmentProblem prob;
    prob.points = pts;
    prob.disks.reserve(sol.centers.size());
    for (const Point& c : sol.centers) prob.disks.push_back(geom::Disk{c, sol.radius});
    prob.lower = lower;
    prob.upper = upper;
    auto part = feasible_partition(prob);
    if (!part) return std::nullopt;
    return Clustering{sol.centers, sol.radius, std::move(*part)};
  };

  return candidates::search_min_radius(points, k, accept, opts, stats);
}

}  // namespace fairdisk::assignment
