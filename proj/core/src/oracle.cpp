#include "fairdisk/oracle.hpp"

#include <limits>
#include <string>
#include <vector>

namespace fairdisk::oracle {

namespace {

using geom::Disk;
using geom::Point;

bool counts_within_bounds(const std::vector<std::vector<std::int64_t>>& counts,
                          const ColorBounds& bounds) {
  for (const auto& cluster : counts) {
    for (std::size_t q = 0; q < bounds.size(); ++q) {
      if (cluster[q] < bounds[q].lower || cluster[q] > bounds[q].upper) return false;
    }
  }
  return true;
}

}  // namespace

std::optional<Clustering> oracle_solve(const Instance& inst, std::uint64_t budget) {
  inst.validate();
  const std::size_t n = inst.size();
  const std::size_t k = static_cast<std::size_t>(inst.k);

  std::uint64_t combos = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (combos > budget / k) {
      throw BudgetExceeded("oracle budget exceeded: k^n > " + std::to_string(budget));
    }
    combos *= k;
  }

  std::vector<int> label(n, 0);
  std::vector<std::vector<std::int64_t>> counts(k,
                                                std::vector<std::int64_t>(inst.color_count()));
  std::vector<Point> cluster_points;
  std::optional<Clustering> best;

  for (;;) {
    for (auto& row : counts) std::fill(row.begin(), row.end(), 0);
    for (std::size_t i = 0; i < n; ++i) ++counts[label[i]][inst.colors[i]];

    // An empty cluster passes exactly when every lower bound is zero.
    if (counts_within_bounds(counts, inst.bounds)) {
      double radius = 0.0;
      std::vector<Point> centers(k, inst.points[0]);
      for (std::size_t c = 0; c < k; ++c) {
        cluster_points.clear();
        for (std::size_t i = 0; i < n; ++i) {
          if (label[i] == static_cast<int>(c)) cluster_points.push_back(inst.points[i]);
        }
        if (cluster_points.empty()) continue;
        const Disk d = geom::min_enclosing_disk(cluster_points);
        centers[c] = d.center;
        radius = std::max(radius, d.radius);
      }
      if (!best || radius < best->radius) {
        best = Clustering{std::move(centers), radius, label};
      }
    }

    // Odometer over labelings.
    std::size_t pos = 0;
    while (pos < n && label[pos] == static_cast<int>(k) - 1) {
      label[pos] = 0;
      ++pos;
    }
    if (pos == n) break;
    ++label[pos];
  }
  return best;
}

std::optional<Clustering> oracle_lu(std::span<const geom::Point> points, int k,
                                    std::int64_t lower, std::int64_t upper,
                                    std::uint64_t budget) {
  Instance inst;
  inst.points.assign(points.begin(), points.end());
  inst.colors.assign(points.size(), 0);
  inst.bounds = {ColorBound{lower, upper}};
  inst.k = k;
  return oracle_solve(inst, budget);
}

}  // namespace fairdisk::oracle
