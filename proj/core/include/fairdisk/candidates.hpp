#pragma once

#include "fairdisk/geometry.hpp"
#include "fairdisk/instance.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace fairdisk::candidates {

using geom::Point;

// Radii an optimal disk can have: circumradii of non-collinear triples and
// half-distances of pairs. Sorted ascending and deduplicated; {0} for a
// single point. Throws std::invalid_argument on an empty set.
std::vector<double> candidate_radii(std::span<const Point> points);

// Canonical centers for radius r: both intersections of the radius-r circles
// around every pair, plus the center directly below every point.
// Deduplicated, first-seen order.
std::vector<Point> candidate_centers(std::span<const Point> points, double r);

// Streams size-k index subsets of {0, ..., m-1} in lexicographic order.
// With replacement, streams non-decreasing index tuples instead (used when
// fewer than k distinct centers exist and disks must repeat).
class KSubsetStream {
 public:
  KSubsetStream(std::size_t m, std::size_t k, bool with_replacement = false);

  // Fills out with the next subset; false once exhausted.
  bool next(std::vector<std::size_t>& out);

 private:
  std::size_t m_;
  std::size_t k_;
  bool replacement_;
  bool started_ = false;
  bool done_;
  std::vector<std::size_t> state_;
};

// Number of subsets KSubsetStream yields, saturating at uint64 max.
std::uint64_t count_subsets(std::size_t m, std::size_t k, bool with_replacement = false);

// k disk centers sharing one common radius.
struct CandidateSolution {
  std::vector<Point> centers;
  double radius = 0.0;
};

enum class ScanMode { binary, full };

struct SearchOptions {
  ScanMode scan = ScanMode::binary;
  bool parallel = false;
};

struct SearchStats {
  std::uint64_t radius_count = 0;
  std::uint64_t radii_probed = 0;
  std::uint64_t subsets_checked = 0;
};

using AcceptFn = std::function<std::optional<Clustering>(const CandidateSolution&)>;

// Minimum candidate radius whose center subsets contain one accepted by
// `accept`, together with the first accepted witness in enumeration order.
// Binary mode relies on acceptance being monotone in the radius; full mode
// scans radii ascending and needs no such assumption. Parallel evaluation
// preserves the sequential witness.
std::optional<Clustering> search_min_radius(std::span<const Point> points, int k,
                                            const AcceptFn& accept,
                                            const SearchOptions& opts = {},
                                            SearchStats* stats = nullptr);

}  // namespace fairdisk::candidates
