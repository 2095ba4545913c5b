#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "arcpath/gridmap.hpp"
#include "arcpath/path.hpp"
#include "arcpath/point.hpp"

namespace arcpath {

struct RoadmapParams {
  int node_count = 0;
  double connection_distance = 0.0;
  std::uint64_t seed = 0;
};

// Undirected weighted graph over free-space samples. Both directed entries
// of every edge are stored; weights are Euclidean edge lengths.
struct Roadmap {
  std::vector<Point2> vertices;
  std::vector<std::vector<std::pair<int, double>>> adjacency;
  RoadmapParams params;

  std::size_t edge_count() const;  // undirected
};

// Exactly n uniform samples over the world rectangle accepted by is_free;
// deterministic for a fixed seed. Throws SamplingError after 1000 * n
// rejected attempts.
std::vector<Point2> sample_free(const OccupancyGrid& grid, int n,
                                std::uint64_t seed);

// Connects every vertex pair within connection_distance whose joining
// segment is collision-free.
Roadmap build_roadmap(const OccupancyGrid& grid,
                      const std::vector<Point2>& samples,
                      double connection_distance);

// Minimum-total-weight path; ties broken by smaller vertex index at
// extraction. nullopt when the goal is unreachable.
std::optional<std::vector<int>> dijkstra_indices(const Roadmap& roadmap,
                                                 int source_index,
                                                 int goal_index);
std::optional<PolylinePath> dijkstra(const Roadmap& roadmap, int source_index,
                                     int goal_index);

struct PlanParams {
  int node_count = 1000;
  double connection_distance = 5.0;
  std::uint64_t seed = 0;
  double inflation_radius = 0.0;
};

struct PlanStats {
  double build_seconds = 0.0;       // inflate + sample + connect + query
  std::size_t sample_count = 0;     // roadmap vertices incl. start and goal
  std::size_t edge_count = 0;       // undirected
  std::size_t path_node_count = 0;  // 0 when no path was found
};

struct PlanResult {
  std::optional<PolylinePath> path;
  PlanStats stats;
  Roadmap roadmap;          // start at index N, goal at index N + 1
  OccupancyGrid inflated;   // the planning grid
};

// Full construction + query pipeline: inflate, sample, insert start and
// goal as ordinary vertices, connect, run Dijkstra. Throws PlacementError
// when start or goal is not free on the inflated grid.
PlanResult plan(const OccupancyGrid& grid, Point2 start, Point2 goal,
                const PlanParams& params);

// Line-oriented text format: "v x y" per vertex then "e i j" per
// undirected edge (i < j). Weights are recomputed on read.
void write_roadmap(const Roadmap& roadmap, std::ostream& out);
Roadmap read_roadmap(std::istream& in);

}  // namespace arcpath
