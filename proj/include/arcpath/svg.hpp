#pragma once

#include <string>

#include "arcpath/fillet.hpp"
#include "arcpath/gridmap.hpp"
#include "arcpath/path.hpp"
#include "arcpath/roadmap.hpp"

namespace arcpath {

// Optional overlays on top of the required base map. Pointers may be null;
// the SVG is deterministic for identical inputs.
struct SvgLayers {
  const OccupancyGrid* map = nullptr;       // required: obstacles, dark
  const OccupancyGrid* inflated = nullptr;  // halo where inflated-only
  const Roadmap* roadmap = nullptr;         // thin edge lines
  const PolylinePath* pure = nullptr;       // dashed
  const SmoothedPath* smoothed = nullptr;   // solid, arcs as arc commands
  const Point2* start = nullptr;
  const Point2* goal = nullptr;
};

// World-coordinate SVG (meters, y up) with a declared viewBox.
std::string render_svg(const SvgLayers& layers);

}  // namespace arcpath
