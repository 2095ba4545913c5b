#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "arcpath/point.hpp"

namespace arcpath {

// 2-D binary occupancy grid. Cell (cx, cy) covers the half-open world
// rectangle [origin + cx/res, origin + (cx+1)/res) x [origin + cy/res,
// origin + (cy+1)/res); row 0 is the bottom row (minimum y). Resolution is
// in cells per meter. Values are immutable by convention once a grid has
// been built; all queries below are pure.
class OccupancyGrid {
 public:
  OccupancyGrid(int width_cells, int height_cells, double resolution,
                Point2 origin = {0.0, 0.0});

  int width_cells() const { return width_; }
  int height_cells() const { return height_; }
  double resolution() const { return resolution_; }
  Point2 origin() const { return origin_; }
  double world_width() const { return width_ / resolution_; }
  double world_height() const { return height_ / resolution_; }

  bool in_bounds(int cx, int cy) const {
    return cx >= 0 && cx < width_ && cy >= 0 && cy < height_;
  }
  bool occupied(int cx, int cy) const { return cells_[index(cx, cy)] != 0; }
  void set_occupied(int cx, int cy, bool v) { cells_[index(cx, cy)] = v ? 1 : 0; }
  std::size_t occupied_count() const;

  // Cell containing p under the floor convention; false when p lies outside
  // the world rectangle (points exactly on the max edges are outside).
  bool cell_of(Point2 p, int& cx, int& cy) const;

  friend bool operator==(const OccupancyGrid& a, const OccupancyGrid& b) {
    return a.width_ == b.width_ && a.height_ == b.height_ &&
           a.resolution_ == b.resolution_ && a.origin_ == b.origin_ &&
           a.cells_ == b.cells_;
  }

 private:
  std::size_t index(int cx, int cy) const {
    return static_cast<std::size_t>(cy) * width_ + cx;
  }

  int width_;
  int height_;
  double resolution_;
  Point2 origin_;
  std::vector<std::uint8_t> cells_;
};

enum class MapFormat { AsciiGrid, Pgm };

// ascii-grid: header "W H RES", then H rows of W characters, '#' occupied
// and '.' free; the first body row is the top of the map (max y).
// PGM (P2 or P5): pixel value 0 is occupied, anything greater is free;
// resolution 1 and origin (0,0). Throws ParseError naming line/offset.
OccupancyGrid load_map(std::istream& in, MapFormat format);

// Sniffs the PGM magic, otherwise parses as ascii-grid.
OccupancyGrid load_map_file(const std::string& path);

void write_ascii_grid(const OccupancyGrid& grid, std::ostream& out);

// Dilates occupied cells by a Euclidean disc of ceil(radius * resolution)
// cells, center-to-center. Radius 0 returns the input unchanged.
OccupancyGrid inflate(const OccupancyGrid& grid, double radius_m);

// False outside world bounds or inside an occupied cell.
bool is_free(const OccupancyGrid& grid, Point2 p);

// True iff the closed segment ab touches an occupied cell or leaves the
// world bounds. Exact grid traversal; a segment passing through a lattice
// corner counts every cell sharing that corner on its way.
bool segment_collides(const OccupancyGrid& grid, Point2 a, Point2 b);

}  // namespace arcpath
