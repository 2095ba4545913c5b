#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "arcpath/gridmap.hpp"
#include "arcpath/path.hpp"
#include "arcpath/point.hpp"

namespace arcpath {

// Corners closer than this to pi are kept straight (no arc); corners closer
// than this to zero mean the path doubles back and cannot be filleted.
inline constexpr double kStraightTolerance = 1e-6;
inline constexpr double kReversalTolerance = 1e-6;

// One corner's tangent circular arc.
struct FilletArc {
  Point2 center;
  double radius = 0.0;
  Point2 tangent_start;        // on the incoming edge
  Point2 tangent_end;          // on the outgoing edge
  double start_angle = 0.0;    // angle of tangent_start about center, [0, 2pi)
  double sweep = 0.0;          // signed; positive = counterclockwise
  Point2 corner;               // the replaced path node
  double half_angle = 0.0;     // alpha / 2
  double corner_angle = 0.0;   // interior angle alpha
  double tangent_length = 0.0; // corner to each tangent point
};

struct LineSegment {
  Point2 a;
  Point2 b;
};

using PathElement = std::variant<LineSegment, FilletArc>;

Point2 element_start(const PathElement& e);
Point2 element_end(const PathElement& e);
double element_length(const PathElement& e);

// Arc sample found inside an obstacle when a validation grid was supplied.
struct ArcObstacleViolation {
  std::size_t element_index = 0;
  Point2 where;
};

// Alternating line segments and fillet arcs; consecutive elements share an
// endpoint and the ends equal the source polyline's start and goal.
struct SmoothedPath {
  std::vector<PathElement> elements;
  std::vector<ArcObstacleViolation> violations;
};

struct SmoothOptions {
  double straight_tolerance = kStraightTolerance;
  double reversal_tolerance = kReversalTolerance;
  // When set, every arc is sampled at <= 0.1-cell spacing and checked free;
  // offending arcs are reported in SmoothedPath::violations, never altered.
  const OccupancyGrid* grid = nullptr;
};

struct TangentPoints {
  Point2 a;  // on the incoming edge, distance h from the corner
  Point2 b;  // on the outgoing edge, distance h from the corner
  double h = 0.0;
};

struct CircleCenters {
  Point2 c1;
  Point2 c2;
};

struct SelectedCenter {
  Point2 center;
  bool degenerate = false;
};

struct ArcAngles {
  double start_angle = 0.0;
  double sweep = 0.0;
};

double edge_length(Point2 p, Point2 q);

// Interior angle at p1 between rays p1->p0 and p1->p2, in (0, pi]; a exact
// doubling-back returns 0. Throws GeometryError on coincident points.
double corner_angle(Point2 p0, Point2 p1, Point2 p2);

// h is half the shorter incident edge; both points sit at distance h from
// the corner so a circle tangent to both edges through them exists.
TangentPoints tangent_points(Point2 p0, Point2 p1, Point2 p2);

// r = tan(alpha / 2) * h. Throws GeometryError when alpha is within
// straight_tol of pi (no arc needed) or at most reversal_tol (cusp).
double fillet_radius(double alpha, double h,
                     double straight_tol = kStraightTolerance,
                     double reversal_tol = kReversalTolerance);

// The two centers of radius-r circles through both a and b; coincident when
// |a - b| = 2r. Throws GeometryError when |a - b| > 2r + 1e-9 or a == b.
CircleCenters circle_centers(Point2 a, Point2 b, double r);

// The candidate strictly farther from the corner; ties within 1e-12 return
// c1 flagged degenerate.
SelectedCenter select_center(Point2 corner, Point2 c1, Point2 c2);

// Start angle of a about the center in [0, 2pi) and the signed sweep toward
// b; |sweep| <= pi, sign from the cross product of the radial vectors.
ArcAngles arc_params(Point2 center, Point2 a, Point2 b);

// Full construction for one corner: angle, tangent points, radius, center
// selection, arc angles.
FilletArc fillet_corner(Point2 p0, Point2 p1, Point2 p2,
                        double straight_tol = kStraightTolerance,
                        double reversal_tol = kReversalTolerance);

// Replaces every non-straight interior corner with its fillet arc.
// Consecutive duplicate nodes are dropped first. Throws SmoothingError when
// a corner doubles back (alpha <= reversal tolerance).
SmoothedPath smooth_path(const PolylinePath& path, const SmoothOptions& opts = {});

double path_length(const PolylinePath& path);
double smoothed_length(const SmoothedPath& path);

// Line-oriented text format, 9 fractional digits:
//   L x1 y1 x2 y2
//   A cx cy r start_angle sweep
void write_smoothed_path(const SmoothedPath& path, std::ostream& out);
SmoothedPath read_smoothed_path(std::istream& in);

// SVG path data ("M .. L .. A ..") in world coordinates.
std::string svg_path_data(const SmoothedPath& path);

}  // namespace arcpath
