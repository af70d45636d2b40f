#pragma once

#include "fairdisk/geometry.hpp"

#include <cstdint>
#include <vector>

namespace fairdisk {

// Per-cluster occupancy bounds for one color.
struct ColorBound {
  std::int64_t lower = 0;
  std::int64_t upper = 0;
};

// Indexed by color id.
using ColorBounds = std::vector<ColorBound>;

struct Instance {
  std::vector<geom::Point> points;
  std::vector<int> colors;  // color id per point
  ColorBounds bounds;
  int k = 1;

  std::size_t size() const { return points.size(); }
  std::size_t color_count() const { return bounds.size(); }

  // Throws std::invalid_argument when any structural invariant fails.
  void validate() const;
};

struct Clustering {
  std::vector<geom::Point> centers;
  double radius = 0.0;
  std::vector<int> assignment;  // cluster id per point, input order
};

}  // namespace fairdisk
