#pragma once

#include "fairdisk/candidates.hpp"
#include "fairdisk/flow.hpp"
#include "fairdisk/geometry.hpp"
#include "fairdisk/instance.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace fairdisk::assignment {

using geom::Disk;
using geom::Point;

// Fixed disks sharing one radius, with one occupancy range per cluster.
struct AssignmentProblem {
  std::vector<Point> points;
  std::vector<Disk> disks;
  std::int64_t lower = 0;
  std::int64_t upper = 0;
};

// Unit-supply network: s -> point (bounds [1,1]) -> covering disk ([0,1])
// -> t ([lower, upper]). Throws std::invalid_argument when some point is
// covered by no disk; callers check coverage first.
flow::BoundedNetwork build_network(const AssignmentProblem& prob);

// Cluster index per point when the occupancy bounds admit an assignment,
// read off the arcs carrying one unit of flow.
std::optional<std::vector<int>> feasible_partition(const AssignmentProblem& prob);

// Exact k-center with per-cluster occupancy bounds: the minimum common
// radius whose canonical disks cover the points and admit a partition with
// every cluster size in [lower, upper].
std::optional<Clustering> solve_lu_kcenter(std::span<const Point> points, int k,
                                           std::int64_t lower, std::int64_t upper,
                                           const candidates::SearchOptions& opts = {},
                                           candidates::SearchStats* stats = nullptr);

}  // namespace fairdisk::assignment
