#pragma once

#include "fairdisk/candidates.hpp"
#include "fairdisk/instance.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fairdisk::fair {

// Decides one candidate disk set: the disks must cover every point and, for
// each color independently, admit a flow assignment keeping every cluster's
// count of that color within bounds. The per-color partitions merge into one
// assignment because each point has exactly one color.
std::optional<Clustering> check_fair(const candidates::CandidateSolution& sol,
                                     const Instance& inst);

// Exact minimum-radius fair clustering over all candidate disk sets.
std::optional<Clustering> solve(const Instance& inst,
                                const candidates::SearchOptions& opts = {},
                                candidates::SearchStats* stats = nullptr);

// Examines `samples` randomly chosen candidate disk sets and keeps the best.
// Falls back to full enumeration when samples covers the whole candidate
// space. An empty result does not prove infeasibility. Reproducible per seed.
std::optional<Clustering> solve_heuristic_random(const Instance& inst,
                                                 std::uint64_t samples,
                                                 std::uint64_t seed);

struct Violation {
  enum class Kind {
    assignment_size,
    center_count,
    bad_radius,
    cluster_index,
    coverage,
    color_lower,
    color_upper,
  };
  Kind kind;
  int point = -1;    // offending point, when applicable
  int cluster = -1;  // offending cluster, when applicable
  int color = -1;    // offending color, when applicable
  std::string message;
};

// Audits a clustering against an instance; empty when every invariant holds.
std::vector<Violation> validate(const Instance& inst, const Clustering& c);

}  // namespace fairdisk::fair
