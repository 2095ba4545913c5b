#pragma once

#include <iosfwd>
#include <vector>

#include "arcpath/fillet.hpp"
#include "arcpath/path.hpp"
#include "arcpath/point.hpp"

namespace arcpath {

struct RobotParams {
  double track_width = 1.0;
  double sample_time = 0.1;
  double frame_size = 1.25;
};

struct ControllerParams {
  double lookahead = 0.3;
  double desired_linear_velocity = 0.6;
  double max_angular_velocity = 2.0;
  double goal_radius = 0.3;  // defaults to the lookahead distance
};

struct Pose {
  double x = 0.0;
  double y = 0.0;
  double theta = 0.0;
};

struct TrajectorySample {
  double t = 0.0;
  double x = 0.0;
  double y = 0.0;
  double theta = 0.0;
};

struct Trajectory {
  std::vector<TrajectorySample> samples;
  double total_time = 0.0;
  bool reached_goal = false;
};

// Waypoints along the path with consecutive gap <= spacing, endpoints
// included; arc samples lie exactly on their circles.
std::vector<Point2> densify(const PolylinePath& path, double spacing);
std::vector<Point2> densify(const SmoothedPath& path, double spacing);

// Standard pure pursuit on unicycle kinematics: constant commanded linear
// velocity, angular velocity 2 v sin(e) / lookahead clamped to the cap,
// Euler integration at the robot sample time. Terminates inside goal_radius
// of the final point or at the timeout (reached_goal = false).
Trajectory pure_pursuit_follow(const std::vector<Point2>& path_points,
                               Pose start, const RobotParams& robot,
                               const ControllerParams& ctrl, double timeout_s);

// End-to-end replay: densify at lookahead / 3, start at the path head
// pointed along it, timeout 10x the nominal traversal time.
Trajectory replay(const PolylinePath& path, const RobotParams& robot = {},
                  const ControllerParams& ctrl = {});
Trajectory replay(const SmoothedPath& path, const RobotParams& robot = {},
                  const ControllerParams& ctrl = {});

// CSV "t,x,y,theta", 9 fractional digits.
void write_trajectory_csv(const Trajectory& traj, std::ostream& out);

}  // namespace arcpath
