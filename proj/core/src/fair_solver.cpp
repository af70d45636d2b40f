#include "fairdisk/fair_solver.hpp"

#include "fairdisk/assignment.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace fairdisk::fair {

namespace {

using candidates::CandidateSolution;
using geom::Disk;
using geom::Point;

std::vector<std::int64_t> color_histogram(const Instance& inst) {
  std::vector<std::int64_t> counts(inst.color_count(), 0);
  for (int c : inst.colors) ++counts[c];
  return counts;
}

// Necessary counting condition: k clusters each holding [l(q), u(q)] points
// of color q requires k*l(q) <= |P_q| <= k*u(q).
bool counting_feasible(const Instance& inst) {
  const auto counts = color_histogram(inst);
  for (std::size_t q = 0; q < counts.size(); ++q) {
    const auto k = static_cast<std::int64_t>(inst.k);
    if (k * inst.bounds[q].lower > counts[q]) return false;
    if (counts[q] > k * inst.bounds[q].upper) return false;
  }
  return true;
}

}  // namespace

std::optional<Clustering> check_fair(const CandidateSolution& sol, const Instance& inst) {
  std::vector<Disk> disks;
  disks.reserve(sol.centers.size());
  for (const Point& c : sol.centers) disks.push_back(Disk{c, sol.radius});

  for (const Point& p : inst.points) {
    bool covered = false;
    for (const Disk& d : disks) {
      if (geom::covers(d, p)) {
        covered = true;
        break;
      }
    }
    if (!covered) return std::nullopt;
  }

  Clustering out;
  out.centers = sol.centers;
  out.radius = sol.radius;
  out.assignment.assign(inst.size(), -1);

  // One flow problem per color; each point carries exactly one color, so the
  // per-color partitions are disjoint and merge into a full assignment.
  for (std::size_t q = 0; q < inst.color_count(); ++q) {
    assignment::AssignmentProblem prob;
    std::vector<std::size_t> original;
    for (std::size_t i = 0; i < inst.size(); ++i) {
      if (inst.colors[i] == static_cast<int>(q)) {
        prob.points.push_back(inst.points[i]);
        original.push_back(i);
      }
    }
    prob.disks = disks;
    prob.lower = inst.bounds[q].lower;
    prob.upper = inst.bounds[q].upper;
    auto part = assignment::feasible_partition(prob);
    if (!part) return std::nullopt;
    for (std::size_t i = 0; i < original.size(); ++i) {
      out.assignment[original[i]] = (*part)[i];
    }
  }
  return out;
}

std::optional<Clustering> solve(const Instance& inst, const candidates::SearchOptions& opts,
                                candidates::SearchStats* stats) {
  inst.validate();
  if (!counting_feasible(inst)) return std::nullopt;
  auto accept = [&](const CandidateSolution& sol) { return check_fair(sol, inst); };
  return candidates::search_min_radius(inst.points, inst.k, accept, opts, stats);
}

std::optional<Clustering> solve_heuristic_random(const Instance& inst, std::uint64_t samples,
                                                 std::uint64_t seed) {
  inst.validate();
  if (samples == 0) throw std::invalid_argument("heuristic needs at least one sample");
  if (!counting_feasible(inst)) return std::nullopt;

  const std::vector<double> radii = candidates::candidate_radii(inst.points);
  const std::size_t k = static_cast<std::size_t>(inst.k);

  // When the sample budget covers the whole candidate space, enumerate it
  // instead; random draws with replacement would only prove less.
  std::uint64_t total = 0;
  bool exhaustive = true;
  for (double r : radii) {
    const std::size_t m = candidates::candidate_centers(inst.points, r).size();
    const std::uint64_t cnt = candidates::count_subsets(m, k, m < k);
    total = (total > std::numeric_limits<std::uint64_t>::max() - cnt)
                ? std::numeric_limits<std::uint64_t>::max()
                : total + cnt;
    if (total > samples) {
      exhaustive = false;
      break;
    }
  }
  if (exhaustive) return solve(inst);

  std::mt19937_64 rng(seed);
  std::vector<std::vector<Point>> center_cache(radii.size());
  std::vector<bool> cached(radii.size(), false);
  std::optional<Clustering> best;

  std::vector<std::size_t> pick(k);
  std::vector<std::size_t> deck;
  for (std::uint64_t s = 0; s < samples; ++s) {
    const std::size_t ri = static_cast<std::size_t>(rng() % radii.size());
    if (!cached[ri]) {
      center_cache[ri] = candidates::candidate_centers(inst.points, radii[ri]);
      cached[ri] = true;
    }
    const auto& centers = center_cache[ri];
    const std::size_t m = centers.size();
    if (m == 0) continue;
    // A sample at a radius no better than the incumbent cannot improve it.
    if (best && radii[ri] >= best->radius) continue;

    if (m < k) {
      for (std::size_t i = 0; i < k; ++i) pick[i] = rng() % m;
    } else {
      deck.resize(m);
      for (std::size_t i = 0; i < m; ++i) deck[i] = i;
      for (std::size_t i = 0; i < k; ++i) {
        std::swap(deck[i], deck[i + rng() % (m - i)]);
        pick[i] = deck[i];
      }
    }
    std::sort(pick.begin(), pick.end());

    CandidateSolution sol;
    sol.radius = radii[ri];
    sol.centers.reserve(k);
    for (std::size_t i : pick) sol.centers.push_back(centers[i]);
    if (auto c = check_fair(sol, inst)) best = std::move(c);
  }
  return best;
}

std::vector<Violation> validate(const Instance& inst, const Clustering& c) {
  std::vector<Violation> out;
  const std::size_t n = inst.size();
  const int k = inst.k;

  if (c.assignment.size() != n) {
    out.push_back({Violation::Kind::assignment_size, -1, -1, -1,
                   "assignment covers " + std::to_string(c.assignment.size()) +
                       " points, instance has " + std::to_string(n)});
    return out;  // indices below would be meaningless
  }
  if (static_cast<int>(c.centers.size()) != k) {
    out.push_back({Violation::Kind::center_count, -1, -1, -1,
                   "clustering has " + std::to_string(c.centers.size()) +
                       " centers, instance asks for " + std::to_string(k)});
  }
  if (!(c.radius >= 0.0) || !std::isfinite(c.radius)) {
    out.push_back({Violation::Kind::bad_radius, -1, -1, -1,
                   "radius must be a non-negative finite number"});
  }

  std::vector<std::vector<std::int64_t>> counts(
      static_cast<std::size_t>(k), std::vector<std::int64_t>(inst.color_count(), 0));
  for (std::size_t i = 0; i < n; ++i) {
    const int a = c.assignment[i];
    if (a < 0 || a >= k) {
      out.push_back({Violation::Kind::cluster_index, static_cast<int>(i), a, -1,
                     "point " + std::to_string(i) + " assigned to invalid cluster " +
                         std::to_string(a)});
      continue;
    }
    ++counts[a][inst.colors[i]];
    if (static_cast<std::size_t>(a) < c.centers.size()) {
      const double d = geom::dist(inst.points[i], c.centers[a]);
      if (d > c.radius + geom::tolerance_for(std::max(d, c.radius))) {
        out.push_back({Violation::Kind::coverage, static_cast<int>(i), a, -1,
                       "point " + std::to_string(i) + " lies at distance " +
                           std::to_string(d) + " from cluster " + std::to_string(a) +
                           ", beyond radius " + std::to_string(c.radius)});
      }
    }
  }

  for (int cl = 0; cl < k; ++cl) {
    for (std::size_t q = 0; q < inst.color_count(); ++q) {
      const std::int64_t have = counts[cl][q];
      if (have < inst.bounds[q].lower) {
        out.push_back({Violation::Kind::color_lower, -1, cl, static_cast<int>(q),
                       "cluster " + std::to_string(cl) + " has " + std::to_string(have) +
                           " points of color " + std::to_string(q) + ", lower bound is " +
                           std::to_string(inst.bounds[q].lower)});
      }
      if (have > inst.bounds[q].upper) {
        out.push_back({Violation::Kind::color_upper, -1, cl, static_cast<int>(q),
                       "cluster " + std::to_string(cl) + " has " + std::to_string(have) +
                           " points of color " + std::to_string(q) + ", upper bound is " +
                           std::to_string(inst.bounds[q].upper)});
      }
    }
  }
  return out;
}

}  // namespace fairdisk::fair
