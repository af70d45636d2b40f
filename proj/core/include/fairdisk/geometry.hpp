#pragma once

#include <optional>
#include <span>
#include <vector>

namespace fairdisk::geom {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

struct Disk {
  Point center;
  double radius = 0.0;
};

// Comparison slack shared by coverage, tangency and collinearity tests:
// epsilon absolute plus epsilon relative on the compared magnitude.
double epsilon();
void set_epsilon(double eps);
double tolerance_for(double magnitude);

double dist(const Point& a, const Point& b);

// Scale-aware degeneracy test on the doubled signed triangle area.
bool collinear(const Point& a, const Point& b, const Point& c);

// Disk through three points; empty when they are collinear or repeated.
std::optional<Disk> circumdisk(const Point& a, const Point& b, const Point& c);

// Smallest disk with a and b on the boundary: centered at the midpoint.
Disk diametral_disk(const Point& a, const Point& b);

// Centers of the radius-r disks having both a and b on the boundary.
// Two when dist(a,b) < 2r, one at tangency, none when the pair is too far
// apart (and none for a coincident pair with r > 0, where the locus is a
// whole circle rather than a finite set).
std::vector<Point> centers_through_pair(const Point& a, const Point& b, double r);

// Center of the radius-r disk whose topmost boundary point is p.
Point center_below_point(const Point& p, double r);

bool covers(const Disk& d, const Point& p);

// Smallest disk covering all points (Welzl). Throws std::invalid_argument
// on an empty set.
Disk min_enclosing_disk(std::span<const Point> points);

}  // namespace fairdisk::geom
