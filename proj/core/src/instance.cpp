#include "fairdisk/instance.hpp"

#include <cmath>
#include <stdexcept>

namespace fairdisk {

void Instance::validate() const {
  if (points.empty()) throw std::invalid_argument("instance has no points");
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (colors.size() != points.size()) {
    throw std::invalid_argument("exactly one color id per point required");
  }
  if (bounds.empty()) throw std::invalid_argument("at least one color must be declared");
  for (const ColorBound& b : bounds) {
    if (b.lower < 0 || b.lower > b.upper) {
      throw std::invalid_argument("color bounds must satisfy 0 <= lower <= upper");
    }
  }
  for (int c : colors) {
    if (c < 0 || c >= static_cast<int>(bounds.size())) {
      throw std::invalid_argument("point references an undeclared color id");
    }
  }
  for (const geom::Point& p : points) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw std::invalid_argument("point coordinates must be finite");
    }
  }
}

}  // namespace fairdisk
