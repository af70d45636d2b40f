#include <benchmark/benchmark.h>

#include "fairdisk/assignment.hpp"
#include "fairdisk/candidates.hpp"
#include "fairdisk/fair_solver.hpp"
#include "fairdisk/flow.hpp"
#include "fairdisk/oracle.hpp"

#include <random>
#include <vector>

namespace {

using fairdisk::Instance;
using fairdisk::geom::Point;

std::vector<Point> make_points(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Point> pts;
  pts.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    pts.push_back({static_cast<double>(rng() % 100000) / 1000.0,
                   static_cast<double>(rng() % 100000) / 1000.0});
  }
  return pts;
}

Instance make_instance(int n, int colors, int k, std::uint64_t seed) {
  Instance inst;
  inst.k = k;
  inst.points = make_points(static_cast<std::size_t>(n), seed);
  std::mt19937_64 rng(seed ^ 0xabcdef);
  for (int i = 0; i < n; ++i) {
    inst.colors.push_back(static_cast<int>(rng() % colors));
  }
  for (int q = 0; q < colors; ++q) inst.bounds.push_back({0, n});
  return inst;
}

void BM_CandidateRadii(benchmark::State& state) {
  const auto pts = make_points(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fairdisk::candidates::candidate_radii(pts));
  }
}
BENCHMARK(BM_CandidateRadii)->Arg(8)->Arg(16)->Arg(32);

void BM_CandidateCenters(benchmark::State& state) {
  const auto pts = make_points(static_cast<std::size_t>(state.range(0)), 2);
  const auto radii = fairdisk::candidates::candidate_radii(pts);
  const double r = radii[radii.size() / 2];
  for (auto _ : state) {
    benchmark::DoNotOptimize(fairdisk::candidates::candidate_centers(pts, r));
  }
}
BENCHMARK(BM_CandidateCenters)->Arg(8)->Arg(16)->Arg(32);

void BM_BoundedMaxFlow(benchmark::State& state) {
  // Shape of an assignment network: n points, 3 disks, full coverage.
  const int n = static_cast<int>(state.range(0));
  fairdisk::flow::BoundedNetwork net;
  net.node_count = n + 5;
  net.source = 0;
  net.sink = n + 4;
  for (int i = 0; i < n; ++i) net.arcs.push_back({0, 1 + i, 1, 1});
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < 3; ++j) net.arcs.push_back({1 + i, n + 1 + j, 0, 1});
  }
  for (int j = 0; j < 3; ++j) net.arcs.push_back({n + 1 + j, net.sink, 1, n});
  for (auto _ : state) {
    benchmark::DoNotOptimize(fairdisk::flow::max_flow_with_lower_bounds(net));
  }
}
BENCHMARK(BM_BoundedMaxFlow)->Arg(16)->Arg(64)->Arg(256);

void BM_SolveExact(benchmark::State& state) {
  const Instance inst =
      make_instance(static_cast<int>(state.range(0)), 2, 2, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fairdisk::fair::solve(inst));
  }
}
BENCHMARK(BM_SolveExact)->Arg(8)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_SolveHeuristic(benchmark::State& state) {
  const Instance inst = make_instance(24, 3, 2, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fairdisk::fair::solve_heuristic_random(inst, 100, 7));
  }
}
BENCHMARK(BM_SolveHeuristic)->Unit(benchmark::kMillisecond);

void BM_Oracle(benchmark::State& state) {
  const Instance inst = make_instance(8, 2, 2, 5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fairdisk::oracle::oracle_solve(inst));
  }
}
BENCHMARK(BM_Oracle)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
