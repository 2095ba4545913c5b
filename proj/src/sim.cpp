#include "arcpath/sim.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "arcpath/textio.hpp"

namespace arcpath {

namespace {

void densify_segment(Point2 a, Point2 b, double spacing,
                     std::vector<Point2>& out) {
  const double len = distance(a, b);
  const int k = std::max(1, static_cast<int>(std::ceil(len / spacing)));
  for (int j = 1; j <= k; ++j) {
    const double t = static_cast<double>(j) / k;
    out.push_back(a + t * (b - a));
  }
}

void densify_arc(const FilletArc& arc, double spacing,
                 std::vector<Point2>& out) {
  const double arc_len = arc.radius * std::abs(arc.sweep);
  const int k = std::max(1, static_cast<int>(std::ceil(arc_len / spacing)));
  for (int j = 1; j <= k; ++j) {
    const double phi = arc.start_angle + arc.sweep * (static_cast<double>(j) / k);
    out.push_back(arc.center + arc.radius * unit_from_angle(phi));
  }
}

}  // namespace

std::vector<Point2> densify(const PolylinePath& path, double spacing) {
  if (!(spacing > 0.0)) throw std::invalid_argument("densify: spacing must be > 0");
  std::vector<Point2> out;
  if (path.nodes.empty()) return out;
  out.push_back(path.nodes.front());
  for (std::size_t i = 1; i < path.nodes.size(); ++i)
    densify_segment(path.nodes[i - 1], path.nodes[i], spacing, out);
  return out;
}

std::vector<Point2> densify(const SmoothedPath& path, double spacing) {
  if (!(spacing > 0.0)) throw std::invalid_argument("densify: spacing must be > 0");
  std::vector<Point2> out;
  if (path.elements.empty()) return out;
  out.push_back(element_start(path.elements.front()));
  for (const PathElement& e : path.elements) {
    if (const auto* seg = std::get_if<LineSegment>(&e))
      densify_segment(seg->a, seg->b, spacing, out);
    else
      densify_arc(std::get<FilletArc>(e), spacing, out);
  }
  return out;
}

Trajectory pure_pursuit_follow(const std::vector<Point2>& path_points,
                               Pose start, const RobotParams& robot,
                               const ControllerParams& ctrl,
                               double timeout_s) {
  if (path_points.empty())
    throw std::invalid_argument("pure_pursuit_follow: empty path");

  Trajectory traj;
  Pose pose = start;
  const Point2 goal = path_points.back();
  const double dt = robot.sample_time;
  const double v = ctrl.desired_linear_velocity;
  long long step = 0;
  double t = 0.0;
  std::size_t progress = 0;
  traj.samples.push_back({t, pose.x, pose.y, pose.theta});

  while (true) {
    if (distance({pose.x, pose.y}, goal) <= ctrl.goal_radius) {
      traj.reached_goal = true;
      break;
    }
    if (t >= timeout_s) break;

    // First path point at least a lookahead away, never moving backward.
    while (progress + 1 < path_points.size() &&
           distance({pose.x, pose.y}, path_points[progress]) < ctrl.lookahead)
      ++progress;
    const Point2 target = path_points[progress];

    const double heading_error =
        wrap_pi(std::atan2(target.y - pose.y, target.x - pose.x) - pose.theta);
    const double omega =
        std::clamp(2.0 * v * std::sin(heading_error) / ctrl.lookahead,
                   -ctrl.max_angular_velocity, ctrl.max_angular_velocity);

    pose.x += v * std::cos(pose.theta) * dt;
    pose.y += v * std::sin(pose.theta) * dt;
    pose.theta = wrap_pi(pose.theta + omega * dt);
    ++step;
    t = static_cast<double>(step) * dt;
    traj.samples.push_back({t, pose.x, pose.y, pose.theta});
  }
  traj.total_time = t;
  return traj;
}

namespace {

Trajectory replay_points(const std::vector<Point2>& pts, double total_length,
                         const RobotParams& robot, const ControllerParams& ctrl) {
  if (pts.empty()) throw std::invalid_argument("replay: empty path");
  Pose start{pts.front().x, pts.front().y, 0.0};
  if (pts.size() > 1) {
    const Point2 d = pts[1] - pts[0];
    start.theta = std::atan2(d.y, d.x);
  }
  const double nominal = total_length / ctrl.desired_linear_velocity;
  const double timeout = std::max(10.0 * nominal, 10.0 * robot.sample_time);
  return pure_pursuit_follow(pts, start, robot, ctrl, timeout);
}

}  // namespace

Trajectory replay(const PolylinePath& path, const RobotParams& robot,
                  const ControllerParams& ctrl) {
  return replay_points(densify(path, ctrl.lookahead / 3.0), path_length(path),
                       robot, ctrl);
}

Trajectory replay(const SmoothedPath& path, const RobotParams& robot,
                  const ControllerParams& ctrl) {
  return replay_points(densify(path, ctrl.lookahead / 3.0),
                       smoothed_length(path), robot, ctrl);
}

void write_trajectory_csv(const Trajectory& traj, std::ostream& out) {
  out << "t,x,y,theta\n";
  for (const TrajectorySample& s : traj.samples)
    out << fmt9(s.t) << ',' << fmt9(s.x) << ',' << fmt9(s.y) << ','
        << fmt9(s.theta) << '\n';
}

}  // namespace arcpath
