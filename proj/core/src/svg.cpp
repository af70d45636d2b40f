#include "fairdisk/io.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <string>

namespace fairdisk::io {

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

// Declared color names that are CSS color keywords render as themselves;
// anything else falls back to a fixed palette by declaration order.
const std::array<const char*, 16> kKnownNames = {
    "red",    "blue",  "green",   "orange", "purple", "brown",  "pink",  "gray",
    "grey",   "olive", "cyan",    "magenta", "black", "teal",   "navy",  "maroon"};

const std::array<const char*, 10> kPalette = {
    "#d62728", "#1f77b4", "#2ca02c", "#ff7f0e", "#9467bd",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

std::string color_for(const std::string& name, std::size_t index) {
  for (const char* known : kKnownNames) {
    if (name == known) return name;
  }
  return kPalette[index % kPalette.size()];
}

}  // namespace

std::string render_svg(const NamedInstance& ni, const ResultDocument& doc) {
  const Instance& inst = ni.instance;
  const bool has_solution = doc.status != Status::infeasible;

  double min_x = inst.points[0].x, max_x = inst.points[0].x;
  double min_y = inst.points[0].y, max_y = inst.points[0].y;
  auto grow = [&](double x, double y) {
    min_x = std::min(min_x, x);
    max_x = std::max(max_x, x);
    min_y = std::min(min_y, y);
    max_y = std::max(max_y, y);
  };
  for (const geom::Point& p : inst.points) grow(p.x, p.y);
  if (has_solution) {
    for (const geom::Point& c : doc.clustering.centers) {
      grow(c.x - doc.clustering.radius, c.y - doc.clustering.radius);
      grow(c.x + doc.clustering.radius, c.y + doc.clustering.radius);
    }
  }

  const double extent = std::max({max_x - min_x, max_y - min_y, 1e-6});
  const double pad = 0.08 * extent;
  min_x -= pad;
  max_x += pad;
  min_y -= pad;
  max_y += pad;
  const double width = max_x - min_x;
  const double height = max_y - min_y;
  // SVG y grows downward; reflect world y inside the box instead of using a
  // transform so text stays upright.
  auto flip_y = [&](double y) { return (max_y + min_y) - y; };

  const double dot_r = 0.012 * extent;
  const double stroke_w = 0.004 * extent;

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"" +
         num(640.0 * height / width) + "\" viewBox=\"" + num(min_x) + " " + num(min_y) +
         " " + num(width) + " " + num(height) + "\">\n";

  if (has_solution) {
    for (const geom::Point& c : doc.clustering.centers) {
      svg += "  <circle class=\"disk\" cx=\"" + num(c.x) + "\" cy=\"" +
             num(flip_y(c.y)) + "\" r=\"" + num(doc.clustering.radius) +
             "\" fill=\"none\" stroke=\"#555555\" stroke-width=\"" + num(stroke_w) +
             "\"/>\n";
    }
  }
  for (std::size_t i = 0; i < inst.size(); ++i) {
    const geom::Point& p = inst.points[i];
    const std::size_t q = static_cast<std::size_t>(inst.colors[i]);
    svg += "  <circle class=\"dot\" cx=\"" + num(p.x) + "\" cy=\"" + num(flip_y(p.y)) +
           "\" r=\"" + num(dot_r) + "\" fill=\"" + color_for(ni.color_names[q], q) +
           "\"/>\n";
  }
  if (!has_solution) {
    svg += "  <text x=\"" + num(min_x + 0.5 * pad) + "\" y=\"" +
           num(min_y + 1.5 * pad) + "\" font-size=\"" + num(0.06 * extent) +
           "\" fill=\"#333333\">infeasible</text>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace fairdisk::io
