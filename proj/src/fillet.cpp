#include "arcpath/fillet.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "arcpath/errors.hpp"
#include "arcpath/textio.hpp"

namespace arcpath {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}  // namespace

Point2 element_start(const PathElement& e) {
  if (const auto* seg = std::get_if<LineSegment>(&e)) return seg->a;
  return std::get<FilletArc>(e).tangent_start;
}

Point2 element_end(const PathElement& e) {
  if (const auto* seg = std::get_if<LineSegment>(&e)) return seg->b;
  return std::get<FilletArc>(e).tangent_end;
}

double element_length(const PathElement& e) {
  if (const auto* seg = std::get_if<LineSegment>(&e))
    return distance(seg->a, seg->b);
  const auto& arc = std::get<FilletArc>(e);
  return arc.radius * std::abs(arc.sweep);
}

double edge_length(Point2 p, Point2 q) { return distance(p, q); }

double corner_angle(Point2 p0, Point2 p1, Point2 p2) {
  if (p0 == p1 || p1 == p2)
    throw GeometryError("corner_angle: coincident points");
  const double ain = std::atan2(p0.y - p1.y, p0.x - p1.x);
  const double aout = std::atan2(p2.y - p1.y, p2.x - p1.x);
  return std::abs(std::remainder(ain - aout, kTwoPi));
}

TangentPoints tangent_points(Point2 p0, Point2 p1, Point2 p2) {
  const double len_in = edge_length(p0, p1);
  const double len_out = edge_length(p1, p2);
  if (len_in == 0.0 || len_out == 0.0)
    throw GeometryError("tangent_points: zero-length edge");
  const double h = 0.5 * std::min(len_in, len_out);
  const Point2 a = p1 + (h / len_in) * (p0 - p1);
  const Point2 b = p1 + (h / len_out) * (p2 - p1);
  return {a, b, h};
}

double fillet_radius(double alpha, double h, double straight_tol,
                     double reversal_tol) {
  if (!(h > 0.0)) throw std::invalid_argument("fillet_radius: h must be > 0");
  if (alpha <= reversal_tol)
    throw GeometryError("fillet_radius: reversal corner (alpha ~ 0)");
  if (alpha >= kPi - straight_tol)
    throw GeometryError("fillet_radius: straight corner (alpha ~ pi)");
  return std::tan(0.5 * alpha) * h;
}

CircleCenters circle_centers(Point2 a, Point2 b, double r) {
  if (!(r > 0.0)) throw std::invalid_argument("circle_centers: r must be > 0");
  const double d = distance(a, b);
  if (d == 0.0)
    throw GeometryError("circle_centers: coincident tangent points");
  if (d > 2.0 * r + 1e-9)
    throw GeometryError("circle_centers: points farther apart than 2r");
  const double half = 0.5 * d;
  const double q2 = r * r - half * half;
  const double q = q2 > 0.0 ? std::sqrt(q2) : 0.0;
  const Point2 mid{0.5 * (a.x + b.x), 0.5 * (a.y + b.y)};
  const Point2 n = perp_ccw((1.0 / d) * (b - a));
  return {mid + q * n, mid - q * n};
}

SelectedCenter select_center(Point2 corner, Point2 c1, Point2 c2) {
  const double d1 = distance(corner, c1);
  const double d2 = distance(corner, c2);
  if (std::abs(d1 - d2) <= 1e-12) return {c1, true};
  return {d1 > d2 ? c1 : c2, false};
}

ArcAngles arc_params(Point2 center, Point2 a, Point2 b) {
  const Point2 ra = a - center;
  const Point2 rb = b - center;
  const double na = norm(ra);
  const double nb = norm(rb);
  if (na == 0.0 || nb == 0.0) throw GeometryError("arc_params: zero radius");
  if (std::abs(na - nb) > 1e-9)
    throw GeometryError("arc_params: endpoints not equidistant from center");
  double s = std::atan2(ra.y, ra.x);
  if (s < 0.0) s += kTwoPi;
  if (s >= kTwoPi) s = 0.0;
  const double c = std::clamp(dot(ra, rb) / (na * nb), -1.0, 1.0);
  double sweep = std::acos(c);
  if (cross(ra, rb) < 0.0) sweep = -sweep;
  return {s, sweep};
}

FilletArc fillet_corner(Point2 p0, Point2 p1, Point2 p2, double straight_tol,
                        double reversal_tol) {
  const double alpha = corner_angle(p0, p1, p2);
  const TangentPoints tp = tangent_points(p0, p1, p2);
  const double r = fillet_radius(alpha, tp.h, straight_tol, reversal_tol);
  const CircleCenters cc = circle_centers(tp.a, tp.b, r);
  const SelectedCenter sel = select_center(p1, cc.c1, cc.c2);
  if (sel.degenerate)
    throw GeometryError("fillet_corner: center candidates equidistant from corner");
  const ArcAngles ang = arc_params(sel.center, tp.a, tp.b);

#ifndef NDEBUG
  // Cross-product sign rule and arc-enumeration rule must agree: of the two
  // candidate arcs between the tangent points, the fillet is the one whose
  // midpoint lies on the corner side.
  {
    const Point2 mid_chosen =
        sel.center + r * unit_from_angle(ang.start_angle + 0.5 * ang.sweep);
    const Point2 mid_other = sel.center - (mid_chosen - sel.center);
    assert(distance(p1, mid_chosen) < distance(p1, mid_other));
  }
#endif

  FilletArc arc;
  arc.center = sel.center;
  arc.radius = r;
  arc.tangent_start = tp.a;
  arc.tangent_end = tp.b;
  arc.start_angle = ang.start_angle;
  arc.sweep = ang.sweep;
  arc.corner = p1;
  arc.half_angle = 0.5 * alpha;
  arc.corner_angle = alpha;
  arc.tangent_length = tp.h;
  return arc;
}

namespace {

void check_arc_against_grid(const FilletArc& arc, std::size_t element_index,
                            const OccupancyGrid& grid,
                            std::vector<ArcObstacleViolation>& violations) {
  const double spacing = 0.1 / grid.resolution();
  const double arc_len = arc.radius * std::abs(arc.sweep);
  const int k = std::max(1, static_cast<int>(std::ceil(arc_len / spacing)));
  for (int j = 0; j <= k; ++j) {
    const double phi = arc.start_angle + arc.sweep * (static_cast<double>(j) / k);
    const Point2 p = arc.center + arc.radius * unit_from_angle(phi);
    if (!is_free(grid, p)) {
      violations.push_back({element_index, p});
      return;  // one report per arc
    }
  }
}

}  // namespace

SmoothedPath smooth_path(const PolylinePath& path, const SmoothOptions& opts) {
  std::vector<Point2> pts;
  pts.reserve(path.nodes.size());
  for (const Point2& p : path.nodes)
    if (pts.empty() || pts.back() != p) pts.push_back(p);
  if (pts.size() < 2)
    throw GeometryError("smooth_path: need at least two distinct nodes");

  SmoothedPath out;
  Point2 cursor = pts.front();
  for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
    const double alpha = corner_angle(pts[i - 1], pts[i], pts[i + 1]);
    if (std::abs(alpha - kPi) < opts.straight_tolerance) {
      // Collinear enough: keep the corner node as a plain vertex.
      out.elements.push_back(LineSegment{cursor, pts[i]});
      cursor = pts[i];
      continue;
    }
    if (alpha <= opts.reversal_tolerance)
      throw SmoothingError(
          "smooth_path: path doubles back at corner " + std::to_string(i), i);
    const FilletArc arc = fillet_corner(pts[i - 1], pts[i], pts[i + 1],
                                        opts.straight_tolerance,
                                        opts.reversal_tolerance);
    if (cursor != arc.tangent_start)
      out.elements.push_back(LineSegment{cursor, arc.tangent_start});
    out.elements.push_back(arc);
    cursor = arc.tangent_end;
  }
  out.elements.push_back(LineSegment{cursor, pts.back()});

  if (opts.grid) {
    for (std::size_t i = 0; i < out.elements.size(); ++i)
      if (const auto* arc = std::get_if<FilletArc>(&out.elements[i]))
        check_arc_against_grid(*arc, i, *opts.grid, out.violations);
  }
  return out;
}

double path_length(const PolylinePath& path) {
  double total = 0.0;
  for (std::size_t i = 1; i < path.nodes.size(); ++i)
    total += edge_length(path.nodes[i - 1], path.nodes[i]);
  return total;
}

double smoothed_length(const SmoothedPath& path) {
  double total = 0.0;
  for (const PathElement& e : path.elements) total += element_length(e);
  return total;
}

void write_smoothed_path(const SmoothedPath& path, std::ostream& out) {
  for (const PathElement& e : path.elements) {
    if (const auto* seg = std::get_if<LineSegment>(&e)) {
      out << "L " << fmt9(seg->a.x) << ' ' << fmt9(seg->a.y) << ' '
          << fmt9(seg->b.x) << ' ' << fmt9(seg->b.y) << '\n';
    } else {
      const auto& arc = std::get<FilletArc>(e);
      out << "A " << fmt9(arc.center.x) << ' ' << fmt9(arc.center.y) << ' '
          << fmt9(arc.radius) << ' ' << fmt9(arc.start_angle) << ' '
          << fmt9(arc.sweep) << '\n';
    }
  }
}

SmoothedPath read_smoothed_path(std::istream& in) {
  SmoothedPath path;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream ls(line);
    char tag = 0;
    ls >> tag;
    if (tag == 'L') {
      LineSegment seg;
      if (!(ls >> seg.a.x >> seg.a.y >> seg.b.x >> seg.b.y))
        throw ParseError("smoothed path line " + std::to_string(line_no) +
                         ": expected 'L x1 y1 x2 y2'");
      path.elements.push_back(seg);
    } else if (tag == 'A') {
      FilletArc arc;
      if (!(ls >> arc.center.x >> arc.center.y >> arc.radius >>
            arc.start_angle >> arc.sweep))
        throw ParseError("smoothed path line " + std::to_string(line_no) +
                         ": expected 'A cx cy r s sweep'");
      arc.tangent_start = arc.center + arc.radius * unit_from_angle(arc.start_angle);
      arc.tangent_end =
          arc.center + arc.radius * unit_from_angle(arc.start_angle + arc.sweep);
      arc.corner_angle = kPi - std::abs(arc.sweep);
      arc.half_angle = 0.5 * arc.corner_angle;
      const double sin_half = std::sin(arc.half_angle);
      const double tan_half = std::tan(arc.half_angle);
      if (sin_half > 0.0 && tan_half > 0.0) {
        arc.tangent_length = arc.radius / tan_half;
        arc.corner = arc.center + (arc.radius / sin_half) *
                                      unit_from_angle(arc.start_angle +
                                                      0.5 * arc.sweep);
      }
      path.elements.push_back(arc);
    } else {
      throw ParseError("smoothed path line " + std::to_string(line_no) +
                       ": unknown record '" + std::string(1, tag) + "'");
    }
  }
  return path;
}

std::string svg_path_data(const SmoothedPath& path) {
  std::ostringstream out;
  if (path.elements.empty()) return "";
  const Point2 start = element_start(path.elements.front());
  out << "M " << fmt9(start.x) << ' ' << fmt9(start.y);
  for (const PathElement& e : path.elements) {
    const Point2 end = element_end(e);
    if (std::holds_alternative<LineSegment>(e)) {
      out << " L " << fmt9(end.x) << ' ' << fmt9(end.y);
    } else {
      const auto& arc = std::get<FilletArc>(e);
      const int large = std::abs(arc.sweep) > kPi ? 1 : 0;
      const int sweep_flag = arc.sweep > 0.0 ? 1 : 0;
      out << " A " << fmt9(arc.radius) << ' ' << fmt9(arc.radius) << " 0 "
          << large << ' ' << sweep_flag << ' ' << fmt9(end.x) << ' '
          << fmt9(end.y);
    }
  }
  return out.str();
}

}  // namespace arcpath
