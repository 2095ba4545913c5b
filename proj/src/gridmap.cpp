#include "arcpath/gridmap.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "arcpath/errors.hpp"

namespace arcpath {

OccupancyGrid::OccupancyGrid(int width_cells, int height_cells,
                             double resolution, Point2 origin)
    : width_(width_cells),
      height_(height_cells),
      resolution_(resolution),
      origin_(origin),
      cells_(static_cast<std::size_t>(width_cells) * height_cells, 0) {
  if (width_cells <= 0 || height_cells <= 0)
    throw std::invalid_argument("OccupancyGrid: dimensions must be positive");
  if (!(resolution > 0.0) || !std::isfinite(resolution))
    throw std::invalid_argument("OccupancyGrid: resolution must be positive");
}

std::size_t OccupancyGrid::occupied_count() const {
  return static_cast<std::size_t>(
      std::count_if(cells_.begin(), cells_.end(), [](auto c) { return c != 0; }));
}

bool OccupancyGrid::cell_of(Point2 p, int& cx, int& cy) const {
  if (!std::isfinite(p.x) || !std::isfinite(p.y)) return false;
  const double gx = std::floor((p.x - origin_.x) * resolution_);
  const double gy = std::floor((p.y - origin_.y) * resolution_);
  if (gx < 0.0 || gy < 0.0 || gx >= width_ || gy >= height_) return false;
  cx = static_cast<int>(gx);
  cy = static_cast<int>(gy);
  return true;
}

namespace {

OccupancyGrid parse_ascii_grid(std::istream& in) {
  std::string header;
  if (!std::getline(in, header))
    throw ParseError("ascii-grid: missing header line");
  std::istringstream hs(header);
  long long w = 0, h = 0;
  double res = 0.0;
  if (!(hs >> w >> h >> res))
    throw ParseError("ascii-grid line 1: expected header 'W H RES'");
  std::string extra;
  if (hs >> extra)
    throw ParseError("ascii-grid line 1: trailing content '" + extra + "'");
  if (w <= 0 || h <= 0)
    throw ParseError("ascii-grid line 1: dimensions must be positive");
  if (!(res > 0.0) || !std::isfinite(res))
    throw ParseError("ascii-grid line 1: resolution must be positive");

  OccupancyGrid grid(static_cast<int>(w), static_cast<int>(h), res);
  for (long long row = 0; row < h; ++row) {
    const long long line_no = row + 2;
    std::string line;
    if (!std::getline(in, line))
      throw ParseError("ascii-grid line " + std::to_string(line_no) +
                       ": unexpected end of input, expected " +
                       std::to_string(h) + " rows");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (static_cast<long long>(line.size()) != w)
      throw ParseError("ascii-grid line " + std::to_string(line_no) +
                       ": expected " + std::to_string(w) +
                       " characters, got " + std::to_string(line.size()));
    const int cy = static_cast<int>(h - 1 - row);  // first body row is top
    for (long long col = 0; col < w; ++col) {
      const char c = line[static_cast<std::size_t>(col)];
      if (c == '#') {
        grid.set_occupied(static_cast<int>(col), cy, true);
      } else if (c != '.') {
        throw ParseError("ascii-grid line " + std::to_string(line_no) +
                         " column " + std::to_string(col + 1) +
                         ": illegal character '" + std::string(1, c) + "'");
      }
    }
  }
  std::string tail;
  long long tail_no = h + 2;
  while (std::getline(in, tail)) {
    if (!tail.empty() && tail.back() == '\r') tail.pop_back();
    if (!tail.empty())
      throw ParseError("ascii-grid line " + std::to_string(tail_no) +
                       ": content past declared " + std::to_string(h) +
                       " rows");
    ++tail_no;
  }
  return grid;
}

// Reads the next PGM header token, skipping whitespace and '#' comments.
std::string next_pgm_token(std::istream& in) {
  std::string tok;
  int c;
  while ((c = in.get()) != EOF) {
    if (c == '#') {
      while ((c = in.get()) != EOF && c != '\n') {
      }
      continue;
    }
    if (std::isspace(c)) continue;
    break;
  }
  if (c == EOF) return tok;
  tok.push_back(static_cast<char>(c));
  while ((c = in.get()) != EOF && !std::isspace(c) && c != '#')
    tok.push_back(static_cast<char>(c));
  if (c == '#') in.unget();
  return tok;
}

long long pgm_int(std::istream& in, const char* what) {
  const std::string tok = next_pgm_token(in);
  if (tok.empty())
    throw ParseError(std::string("pgm: missing ") + what);
  try {
    std::size_t pos = 0;
    const long long v = std::stoll(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ParseError(std::string("pgm: malformed ") + what + " '" + tok + "'");
  }
}

OccupancyGrid parse_pgm(std::istream& in) {
  const std::string magic = next_pgm_token(in);
  if (magic != "P2" && magic != "P5")
    throw ParseError("pgm: bad magic '" + magic + "', expected P2 or P5");
  const long long w = pgm_int(in, "width");
  const long long h = pgm_int(in, "height");
  const long long maxval = pgm_int(in, "maxval");
  if (w <= 0 || h <= 0)
    throw ParseError("pgm: dimensions must be positive");
  if (maxval <= 0 || maxval > 65535)
    throw ParseError("pgm: maxval out of range");

  OccupancyGrid grid(static_cast<int>(w), static_cast<int>(h), 1.0);
  const long long total = w * h;
  if (magic == "P2") {
    for (long long i = 0; i < total; ++i) {
      const long long v = pgm_int(in, ("pixel " + std::to_string(i)).c_str());
      if (v < 0 || v > maxval)
        throw ParseError("pgm: pixel " + std::to_string(i) +
                         " value out of range");
      if (v == 0) {
        const int col = static_cast<int>(i % w);
        const int cy = static_cast<int>(h - 1 - i / w);
        grid.set_occupied(col, cy, true);
      }
    }
  } else {
    // One whitespace byte separates the maxval from the raster.
    const int bytes = maxval < 256 ? 1 : 2;
    for (long long i = 0; i < total; ++i) {
      int v = in.get();
      if (v == EOF)
        throw ParseError("pgm: truncated raster at pixel " + std::to_string(i));
      if (bytes == 2) {
        const int lo = in.get();
        if (lo == EOF)
          throw ParseError("pgm: truncated raster at pixel " +
                           std::to_string(i));
        v = (v << 8) | lo;
      }
      if (v > maxval)
        throw ParseError("pgm: pixel " + std::to_string(i) +
                         " value out of range");
      if (v == 0) {
        const int col = static_cast<int>(i % w);
        const int cy = static_cast<int>(h - 1 - i / w);
        grid.set_occupied(col, cy, true);
      }
    }
  }
  return grid;
}

}  // namespace

OccupancyGrid load_map(std::istream& in, MapFormat format) {
  switch (format) {
    case MapFormat::AsciiGrid:
      return parse_ascii_grid(in);
    case MapFormat::Pgm:
      return parse_pgm(in);
  }
  throw std::invalid_argument("load_map: unknown format");
}

OccupancyGrid load_map_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open map file '" + path + "'");
  char magic[2] = {0, 0};
  in.read(magic, 2);
  in.clear();
  in.seekg(0);
  const bool pgm = magic[0] == 'P' && (magic[1] == '2' || magic[1] == '5');
  return load_map(in, pgm ? MapFormat::Pgm : MapFormat::AsciiGrid);
}

void write_ascii_grid(const OccupancyGrid& grid, std::ostream& out) {
  out << grid.width_cells() << ' ' << grid.height_cells() << ' '
      << grid.resolution() << '\n';
  for (int cy = grid.height_cells() - 1; cy >= 0; --cy) {
    for (int cx = 0; cx < grid.width_cells(); ++cx)
      out << (grid.occupied(cx, cy) ? '#' : '.');
    out << '\n';
  }
}

OccupancyGrid inflate(const OccupancyGrid& grid, double radius_m) {
  if (!(radius_m >= 0.0) || !std::isfinite(radius_m))
    throw std::invalid_argument("inflate: radius must be >= 0");
  const int r = static_cast<int>(std::ceil(radius_m * grid.resolution()));
  if (r == 0) return grid;

  std::vector<std::pair<int, int>> disc;
  for (int dy = -r; dy <= r; ++dy)
    for (int dx = -r; dx <= r; ++dx)
      if (dx * dx + dy * dy <= r * r) disc.emplace_back(dx, dy);

  OccupancyGrid out = grid;
  for (int cy = 0; cy < grid.height_cells(); ++cy) {
    for (int cx = 0; cx < grid.width_cells(); ++cx) {
      if (!grid.occupied(cx, cy)) continue;
      for (const auto& [dx, dy] : disc) {
        const int nx = cx + dx;
        const int ny = cy + dy;
        if (out.in_bounds(nx, ny)) out.set_occupied(nx, ny, true);
      }
    }
  }
  return out;
}

bool is_free(const OccupancyGrid& grid, Point2 p) {
  int cx = 0, cy = 0;
  if (!grid.cell_of(p, cx, cy)) return false;
  return !grid.occupied(cx, cy);
}

bool segment_collides(const OccupancyGrid& grid, Point2 a, Point2 b) {
  int acx = 0, acy = 0, bcx = 0, bcy = 0;
  if (!grid.cell_of(a, acx, acy) || !grid.cell_of(b, bcx, bcy))
    return true;  // endpoint outside the world
  if (grid.occupied(acx, acy) || grid.occupied(bcx, bcy)) return true;
  if (acx == bcx && acy == bcy) return false;

  // Amanatides-Woo traversal in cell units from a toward b.
  const double res = grid.resolution();
  const Point2 o = grid.origin();
  const double gx0 = (a.x - o.x) * res;
  const double gy0 = (a.y - o.y) * res;
  const double gx1 = (b.x - o.x) * res;
  const double gy1 = (b.y - o.y) * res;
  const double dx = gx1 - gx0;
  const double dy = gy1 - gy0;

  int cx = acx, cy = acy;
  const int step_x = dx > 0.0 ? 1 : (dx < 0.0 ? -1 : 0);
  const int step_y = dy > 0.0 ? 1 : (dy < 0.0 ? -1 : 0);
  const double inf = std::numeric_limits<double>::infinity();
  const double t_delta_x = step_x != 0 ? std::abs(1.0 / dx) : inf;
  const double t_delta_y = step_y != 0 ? std::abs(1.0 / dy) : inf;
  double t_max_x = inf, t_max_y = inf;
  if (step_x > 0)
    t_max_x = (cx + 1 - gx0) / dx;
  else if (step_x < 0)
    t_max_x = (cx - gx0) / dx;
  if (step_y > 0)
    t_max_y = (cy + 1 - gy0) / dy;
  else if (step_y < 0)
    t_max_y = (cy - gy0) / dy;

  const auto blocked = [&](int x, int y) {
    return grid.in_bounds(x, y) && grid.occupied(x, y);
  };

  // Each iteration advances at least one cell toward the target.
  long long guard =
      static_cast<long long>(std::abs(bcx - acx)) + std::abs(bcy - acy) + 4;
  while (cx != bcx || cy != bcy) {
    if (--guard < 0) return true;  // numeric stall, treat as collision
    if (t_max_x < t_max_y) {
      cx += step_x;
      t_max_x += t_delta_x;
    } else if (t_max_y < t_max_x) {
      cy += step_y;
      t_max_y += t_delta_y;
    } else {
      // Exact pass through a lattice corner: every cell sharing the corner
      // counts as touched.
      if (blocked(cx + step_x, cy) || blocked(cx, cy + step_y)) return true;
      cx += step_x;
      cy += step_y;
      t_max_x += t_delta_x;
      t_max_y += t_delta_y;
    }
    if (!grid.in_bounds(cx, cy)) return true;
    if (grid.occupied(cx, cy)) return true;
  }
  return false;
}

}  // namespace arcpath
