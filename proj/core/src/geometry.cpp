#include "fairdisk/geometry.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>

namespace fairdisk::geom {

namespace {

std::atomic<double> g_epsilon{1e-9};

}  // namespace

double epsilon() { return g_epsilon.load(std::memory_order_relaxed); }

void set_epsilon(double eps) {
  if (!(eps > 0.0) || !std::isfinite(eps)) {
    throw std::invalid_argument("epsilon must be a positive finite number");
  }
  g_epsilon.store(eps, std::memory_order_relaxed);
}

double tolerance_for(double magnitude) {
  return epsilon() * (1.0 + std::abs(magnitude));
}

double dist(const Point& a, const Point& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

bool collinear(const Point& a, const Point& b, const Point& c) {
  const double area2 = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  const double sx = std::max({a.x, b.x, c.x}) - std::min({a.x, b.x, c.x});
  const double sy = std::max({a.y, b.y, c.y}) - std::min({a.y, b.y, c.y});
  const double scale = std::max(sx, sy);
  // area2 grows with the square of the bounding-box side.
  return std::abs(area2) <= epsilon() * scale * scale;
}

std::optional<Disk> circumdisk(const Point& a, const Point& b, const Point& c) {
  if (collinear(a, b, c)) return std::nullopt;
  // Work relative to a so the construction commutes with translation.
  const double bx = b.x - a.x, by = b.y - a.y;
  const double cx = c.x - a.x, cy = c.y - a.y;
  const double d = 2.0 * (bx * cy - by * cx);
  const double b2 = bx * bx + by * by;
  const double c2 = cx * cx + cy * cy;
  const Point center{a.x + (cy * b2 - by * c2) / d,
                     a.y + (bx * c2 - cx * b2) / d};
  const double r = std::max({dist(center, a), dist(center, b), dist(center, c)});
  return Disk{center, r};
}

Disk diametral_disk(const Point& a, const Point& b) {
  const Point mid{0.5 * (a.x + b.x), 0.5 * (a.y + b.y)};
  return Disk{mid, 0.5 * dist(a, b)};
}

std::vector<Point> centers_through_pair(const Point& a, const Point& b, double r) {
  std::vector<Point> out;
  const double d = dist(a, b);
  const double tol = tolerance_for(std::max(d, 2.0 * r));
  if (d <= tol) {
    // Coincident pair: a single zero-radius disk when r is zero too,
    // otherwise no finite set of centers.
    if (r <= tol) out.push_back(Point{0.5 * (a.x + b.x), 0.5 * (a.y + b.y)});
    return out;
  }
  if (d > 2.0 * r + tol) return out;
  const Point mid{0.5 * (a.x + b.x), 0.5 * (a.y + b.y)};
  if (std::abs(d - 2.0 * r) <= tol) {
    out.push_back(mid);
    return out;
  }
  const double half = 0.5 * d;
  const double h = std::sqrt(std::max(0.0, r * r - half * half));
  const double ux = (b.x - a.x) / d, uy = (b.y - a.y) / d;
  // Perpendicular offsets from the chord midpoint.
  out.push_back(Point{mid.x - uy * h, mid.y + ux * h});
  out.push_back(Point{mid.x + uy * h, mid.y - ux * h});
  return out;
}

Point center_below_point(const Point& p, double r) {
  return Point{p.x, p.y - r};
}

bool covers(const Disk& d, const Point& p) {
  const double dd = dist(d.center, p);
  return dd <= d.radius + tolerance_for(std::max(dd, d.radius));
}

namespace {

bool in_disk(const Disk& d, const Point& p) { return covers(d, p); }

// Smallest disk with all support points on the boundary (|support| <= 3).
Disk support_disk(const std::vector<Point>& support) {
  switch (support.size()) {
    case 0:
      return Disk{};
    case 1:
      return Disk{support[0], 0.0};
    case 2:
      return diametral_disk(support[0], support[1]);
    default: {
      // One of the three pair disks may already cover the third point;
      // the circumdisk is only needed otherwise.
      for (int skip = 0; skip < 3; ++skip) {
        const Point& u = support[(skip + 1) % 3];
        const Point& v = support[(skip + 2) % 3];
        Disk d = diametral_disk(u, v);
        if (in_disk(d, support[skip])) return d;
      }
      if (auto d = circumdisk(support[0], support[1], support[2])) return *d;
      // Collinear support: fall back to the widest pair.
      Disk best = diametral_disk(support[0], support[1]);
      for (auto [i, j] : {std::pair{0, 2}, std::pair{1, 2}}) {
        Disk d = diametral_disk(support[i], support[j]);
        if (d.radius > best.radius) best = d;
      }
      return best;
    }
  }
}

Disk welzl(std::span<const Point> pts, std::size_t n, std::vector<Point>& support) {
  if (n == 0 || support.size() == 3) return support_disk(support);
  const Point p = pts[n - 1];
  Disk d = welzl(pts, n - 1, support);
  if (in_disk(d, p)) return d;
  support.push_back(p);
  d = welzl(pts, n - 1, support);
  support.pop_back();
  return d;
}

}  // namespace

Disk min_enclosing_disk(std::span<const Point> points) {
  if (points.empty()) {
    throw std::invalid_argument("min_enclosing_disk: empty point set");
  }
  std::vector<Point> support;
  return welzl(points, points.size(), support);
}

}  // namespace fairdisk::geom
