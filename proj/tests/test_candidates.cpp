#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fairdisk/candidates.hpp"
#include "fairdisk/oracle.hpp"
#include "test_support.hpp"

#include <cmath>
#include <set>

using namespace fairdisk;
using namespace fairdisk::candidates;
using testsup::Rng;
using testsup::near;

namespace {

std::uint64_t choose(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("candidate_radii on tiny sets") {
  const std::vector<Point> pair = {{0, 0}, {2, 0}};
  const auto r1 = candidate_radii(pair);
  REQUIRE(r1.size() == 1);
  CHECK(r1[0] == doctest::Approx(1.0));

  // Half-distances 1, 1, sqrt(2) and one circumradius sqrt(2) dedup to two.
  const std::vector<Point> tri = {{0, 0}, {2, 0}, {0, 2}};
  const auto r2 = candidate_radii(tri);
  REQUIRE(r2.size() == 2);
  CHECK(r2[0] == doctest::Approx(1.0));
  CHECK(r2[1] == doctest::Approx(std::sqrt(2.0)));

  // A collinear triple contributes no circumradius.
  const std::vector<Point> line = {{0, 0}, {1, 0}, {2, 0}};
  const auto r3 = candidate_radii(line);
  REQUIRE(r3.size() == 2);
  CHECK(r3[0] == doctest::Approx(0.5));
  CHECK(r3[1] == doctest::Approx(1.0));

  const auto single = candidate_radii(std::vector<Point>{{5, 5}});
  REQUIRE(single.size() == 1);
  CHECK(single[0] == 0.0);

  CHECK_THROWS_AS(candidate_radii(std::vector<Point>{}), std::invalid_argument);
}

TEST_CASE("candidate_radii is sorted, deduplicated and within the counting bound") {
  Rng rng(71);
  for (int iter = 0; iter < 50; ++iter) {
    const auto pts = testsup::random_points(rng, rng.uniform_int(2, 12));
    const auto radii = candidate_radii(pts);
    const std::uint64_t n = pts.size();
    CHECK(radii.size() <= choose(n, 3) + choose(n, 2));
    for (std::size_t i = 1; i < radii.size(); ++i) {
      CHECK(radii[i] > radii[i - 1]);
    }
  }
}

TEST_CASE("every candidate radius is realizable by a pair or triple") {
  Rng rng(73);
  for (int iter = 0; iter < 20; ++iter) {
    const auto pts = testsup::random_points(rng, rng.uniform_int(2, 8));
    for (double r : candidate_radii(pts)) {
      bool realizable = false;
      for (std::size_t i = 0; i < pts.size() && !realizable; ++i) {
        for (std::size_t j = i + 1; j < pts.size() && !realizable; ++j) {
          realizable = near(0.5 * geom::dist(pts[i], pts[j]), r, 1e-7);
          for (std::size_t l = j + 1; l < pts.size() && !realizable; ++l) {
            if (auto d = geom::circumdisk(pts[i], pts[j], pts[l])) {
              realizable = near(d->radius, r, 1e-7);
            }
          }
        }
      }
      CHECK(realizable);
    }
  }
}

TEST_CASE("candidate_centers on a pair at radius 1") {
  const std::vector<Point> pts = {{0, 0}, {2, 0}};
  const auto centers = candidate_centers(pts, 1.0);
  REQUIRE(centers.size() == 3);
  // Tangency center plus one below-point center per point.
  std::multiset<std::pair<double, double>> got;
  for (const Point& c : centers) got.insert({c.x, c.y});
  CHECK(got.count({1.0, 0.0}) == 1);
  CHECK(got.count({0.0, -1.0}) == 1);
  CHECK(got.count({2.0, -1.0}) == 1);
}

TEST_CASE("candidate_centers of a single point") {
  const auto centers = candidate_centers(std::vector<Point>{{0, 0}}, 1.0);
  REQUIRE(centers.size() == 1);
  CHECK(centers[0].x == doctest::Approx(0.0));
  CHECK(centers[0].y == doctest::Approx(-1.0));
}

TEST_CASE("candidate_centers stays within the counting bound") {
  Rng rng(79);
  for (int iter = 0; iter < 50; ++iter) {
    const auto pts = testsup::random_points(rng, rng.uniform_int(1, 12));
    const std::uint64_t n = pts.size();
    for (double r : candidate_radii(pts)) {
      CHECK(candidate_centers(pts, r).size() <= 2 * choose(n, 2) + n);
    }
  }
}

TEST_CASE("k-subset stream counts and order") {
  auto drain = [](KSubsetStream s) {
    std::vector<std::vector<std::size_t>> all;
    std::vector<std::size_t> idx;
    while (s.next(idx)) all.push_back(idx);
    return all;
  };

  CHECK(drain(KSubsetStream(3, 2)).size() == 3);
  CHECK(drain(KSubsetStream(5, 5)).size() == 1);
  CHECK(drain(KSubsetStream(2, 3)).empty());

  const auto subsets = drain(KSubsetStream(4, 2));
  REQUIRE(subsets.size() == 6);
  CHECK(subsets.front() == std::vector<std::size_t>{0, 1});
  CHECK(subsets.back() == std::vector<std::size_t>{2, 3});
  for (std::size_t i = 1; i < subsets.size(); ++i) {
    CHECK(subsets[i - 1] < subsets[i]);  // lexicographic
  }

  const auto multis = drain(KSubsetStream(2, 3, true));
  REQUIRE(multis.size() == 4);  // C(2+3-1, 3)
  CHECK(multis.front() == std::vector<std::size_t>{0, 0, 0});
  CHECK(multis.back() == std::vector<std::size_t>{1, 1, 1});

  CHECK(count_subsets(3, 2) == 3);
  CHECK(count_subsets(5, 5) == 1);
  CHECK(count_subsets(2, 3) == 0);
  CHECK(count_subsets(2, 3, true) == 4);
  CHECK(count_subsets(64, 3) == 41664);
}

TEST_CASE("oracle optimum appears among the candidate radii") {
  Rng rng(83);
  int solved = 0;
  while (solved < 25) {
    const Instance inst = testsup::random_instance(rng, rng.uniform_int(4, 8),
                                                   rng.uniform_int(1, 3), 2);
    const auto best = oracle::oracle_solve(inst);
    if (!best) continue;
    ++solved;
    bool found = false;
    for (double r : candidate_radii(inst.points)) {
      if (near(r, best->radius)) {
        found = true;
        break;
      }
    }
    CHECK(found);
  }
}
