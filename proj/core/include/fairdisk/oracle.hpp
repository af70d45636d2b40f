#pragma once

#include "fairdisk/geometry.hpp"
#include "fairdisk/instance.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>

namespace fairdisk::oracle {

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exhaustive ground truth for tiny instances: walks every k-labeling, keeps
// the fair ones and scores them by the largest per-cluster enclosing-disk
// radius. Throws BudgetExceeded when k^n labelings exceed the budget.
std::optional<Clustering> oracle_solve(const Instance& inst,
                                       std::uint64_t budget = 10'000'000);

// Single-color convenience wrapper.
std::optional<Clustering> oracle_lu(std::span<const geom::Point> points, int k,
                                    std::int64_t lower, std::int64_t upper,
                                    std::uint64_t budget = 10'000'000);

}  // namespace fairdisk::oracle
