#pragma once

#include <iosfwd>
#include <vector>

#include "arcpath/point.hpp"

namespace arcpath {

// Ordered node sequence from start to goal, as produced by the planner.
struct PolylinePath {
  std::vector<Point2> nodes;
};

// One "x y" line per node, 9 fractional digits.
void write_polyline(const PolylinePath& path, std::ostream& out);
PolylinePath read_polyline(std::istream& in);

}  // namespace arcpath
