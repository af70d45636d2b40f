#include "fairdisk/candidates.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <stdexcept>
#include <thread>
#include <unordered_set>

namespace fairdisk::candidates {

std::vector<double> candidate_radii(std::span<const Point> points) {
  if (points.empty()) throw std::invalid_argument("candidate_radii: empty point set");
  const std::size_t n = points.size();
  std::vector<double> radii;
  if (n == 1) {
    radii.push_back(0.0);  // a single point admits a zero-radius disk
    return radii;
  }
  radii.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      radii.push_back(0.5 * geom::dist(points[i], points[j]));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t l = j + 1; l < n; ++l) {
        if (auto d = geom::circumdisk(points[i], points[j], points[l])) {
          radii.push_back(d->radius);
        }
      }
    }
  }
  std::sort(radii.begin(), radii.end());
  // Two radii are the same value when they differ by at most
  // epsilon * max(1, r); different constructions often rebuild one radius.
  std::vector<double> dedup;
  dedup.reserve(radii.size());
  for (double r : radii) {
    if (dedup.empty() || r - dedup.back() > geom::epsilon() * std::max(1.0, r)) {
      dedup.push_back(r);
    }
  }
  return dedup;
}

namespace {

struct CellKey {
  std::int64_t x;
  std::int64_t y;
  bool operator==(const CellKey&) const = default;
};

struct CellKeyHash {
  std::size_t operator()(const CellKey& k) const {
    std::uint64_t h = static_cast<std::uint64_t>(k.x) * 0x9e3779b97f4a7c15ULL;
    h ^= static_cast<std::uint64_t>(k.y) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

CellKey snap(const Point& p, double eps) {
  return CellKey{static_cast<std::int64_t>(std::llround(p.x / eps)),
                 static_cast<std::int64_t>(std::llround(p.y / eps))};
}

}  // namespace

std::vector<Point> candidate_centers(std::span<const Point> points, double r) {
  std::vector<Point> out;
  std::unordered_set<CellKey, CellKeyHash> seen;
  const double eps = geom::epsilon();
  auto push = [&](const Point& c) {
    if (seen.insert(snap(c, eps)).second) out.push_back(c);
  };
  const std::size_t n = points.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (const Point& c : geom::centers_through_pair(points[i], points[j], r)) {
        push(c);
      }
    }
  }
  for (const Point& p : points) push(geom::center_below_point(p, r));
  return out;
}

KSubsetStream::KSubsetStream(std::size_t m, std::size_t k, bool with_replacement)
    : m_(m), k_(k), replacement_(with_replacement) {
  done_ = (k_ == 0) || (m_ == 0) || (!replacement_ && m_ < k_);
}

bool KSubsetStream::next(std::vector<std::size_t>& out) {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    state_.assign(k_, 0);
    if (!replacement_) {
      for (std::size_t i = 0; i < k_; ++i) state_[i] = i;
    }
    out = state_;
    return true;
  }
  if (replacement_) {
    // Rightmost slot that can still grow; suffix repeats its new value.
    std::size_t i = k_;
    while (i > 0 && state_[i - 1] == m_ - 1) --i;
    if (i == 0) {
      done_ = true;
      return false;
    }
    const std::size_t v = state_[i - 1] + 1;
    for (std::size_t j = i - 1; j < k_; ++j) state_[j] = v;
  } else {
    std::size_t i = k_;
    while (i > 0 && state_[i - 1] == m_ - k_ + (i - 1)) --i;
    if (i == 0) {
      done_ = true;
      return false;
    }
    ++state_[i - 1];
    for (std::size_t j = i; j < k_; ++j) state_[j] = state_[j - 1] + 1;
  }
  out = state_;
  return true;
}

std::uint64_t count_subsets(std::size_t m, std::size_t k, bool with_replacement) {
  if (k == 0 || m == 0) return 0;
  if (with_replacement) {
    m = m + k - 1;  // C(m + k - 1, k)
  } else if (m < k) {
    return 0;
  }
  const std::uint64_t cap = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t result = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    const std::uint64_t factor = m - k + i;
    if (result > cap / factor) return cap;  // saturate
    result = result * factor / i;
  }
  return result;
}

namespace {

struct RadiusProbe {
  std::span<const Point> points;
  int k;
  const AcceptFn& accept;
  bool parallel;
  SearchStats* stats;

  std::optional<Clustering> operator()(double r) const {
    if (stats) ++stats->radii_probed;
    const std::vector<Point> centers = candidate_centers(points, r);
    const std::size_t m = centers.size();
    const std::size_t kk = static_cast<std::size_t>(k);
    // When fewer than k distinct canonical positions exist (coincident
    // points, k > n) disks must repeat, so fall back to multisets.
    const bool repeat = m < kk;
    KSubsetStream stream(m, kk, repeat);

    auto make_solution = [&](const std::vector<std::size_t>& idx) {
      CandidateSolution sol;
      sol.radius = r;
      sol.centers.reserve(kk);
      for (std::size_t i : idx) sol.centers.push_back(centers[i]);
      return sol;
    };

    std::vector<std::size_t> idx;
    if (!parallel) {
      while (stream.next(idx)) {
        if (stats) ++stats->subsets_checked;
        if (auto c = accept(make_solution(idx))) return c;
      }
      return std::nullopt;
    }

    // Deterministic parallelism: evaluate fixed-size blocks concurrently and
    // take the first acceptance in enumeration order.
    const unsigned workers =
        std::clamp(std::thread::hardware_concurrency(), 2u, 8u);
    const std::size_t block = 64 * workers;
    std::vector<CandidateSolution> batch;
    batch.reserve(block);
    for (;;) {
      batch.clear();
      while (batch.size() < block && stream.next(idx)) batch.push_back(make_solution(idx));
      if (batch.empty()) return std::nullopt;
      if (stats) stats->subsets_checked += batch.size();

      std::vector<std::optional<Clustering>> results(batch.size());
      const std::size_t chunk = (batch.size() + workers - 1) / workers;
      std::vector<std::future<void>> futures;
      for (std::size_t begin = 0; begin < batch.size(); begin += chunk) {
        const std::size_t end = std::min(begin + chunk, batch.size());
        futures.push_back(std::async(std::launch::async, [&, begin, end] {
          for (std::size_t i = begin; i < end; ++i) results[i] = accept(batch[i]);
        }));
      }
      for (auto& f : futures) f.get();
      for (auto& res : results) {
        if (res) return res;
      }
    }
  }
};

}  // namespace

std::optional<Clustering> search_min_radius(std::span<const Point> points, int k,
                                            const AcceptFn& accept,
                                            const SearchOptions& opts, SearchStats* stats) {
  if (k < 1) throw std::invalid_argument("search_min_radius: k must be positive");
  const std::vector<double> radii = candidate_radii(points);
  if (stats) stats->radius_count = radii.size();

  RadiusProbe probe{points, k, accept, opts.parallel, stats};

  if (opts.scan == ScanMode::full) {
    for (double r : radii) {
      if (auto c = probe(r)) return c;
    }
    return std::nullopt;
  }

  // First feasible radius by bisection; acceptance is monotone in r because
  // growing the disks preserves coverage and only adds assignment arcs.
  std::size_t lo = 0, hi = radii.size();
  std::optional<Clustering> best;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (auto c = probe(radii[mid])) {
      best = std::move(c);
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return best;
}

}  // namespace fairdisk::candidates
