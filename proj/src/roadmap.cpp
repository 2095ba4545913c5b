#include "arcpath/roadmap.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <istream>
#include <limits>
#include <ostream>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <string>

#include "arcpath/errors.hpp"
#include "arcpath/fillet.hpp"
#include "arcpath/rng.hpp"
#include "arcpath/textio.hpp"

namespace arcpath {

std::size_t Roadmap::edge_count() const {
  std::size_t directed = 0;
  for (const auto& nbrs : adjacency) directed += nbrs.size();
  return directed / 2;
}

std::vector<Point2> sample_free(const OccupancyGrid& grid, int n,
                                std::uint64_t seed) {
  if (n < 0) throw std::invalid_argument("sample_free: n must be >= 0");
  std::vector<Point2> pts;
  pts.reserve(static_cast<std::size_t>(n));
  if (n == 0) return pts;

  Rng rng(seed);
  const Point2 o = grid.origin();
  const double w = grid.world_width();
  const double h = grid.world_height();
  const long long cap = 1000LL * n;
  long long attempts = 0;
  while (static_cast<int>(pts.size()) < n) {
    if (attempts >= cap) {
      const double rate = static_cast<double>(pts.size()) /
                          static_cast<double>(attempts);
      throw SamplingError(
          "sample_free: gave up after " + std::to_string(attempts) +
              " attempts (" + std::to_string(pts.size()) + "/" +
              std::to_string(n) + " accepted, acceptance rate " +
              std::to_string(rate) + ")",
          rate);
    }
    ++attempts;
    const Point2 p{o.x + rng.uniform01() * w, o.y + rng.uniform01() * h};
    if (is_free(grid, p)) pts.push_back(p);
  }
  return pts;
}

Roadmap build_roadmap(const OccupancyGrid& grid,
                      const std::vector<Point2>& samples,
                      double connection_distance) {
  if (!(connection_distance > 0.0))
    throw std::invalid_argument(
        "build_roadmap: connection_distance must be > 0");
  Roadmap rm;
  rm.vertices = samples;
  rm.adjacency.assign(samples.size(), {});
  rm.params.node_count = static_cast<int>(samples.size());
  rm.params.connection_distance = connection_distance;

  const double cd2 = connection_distance * connection_distance;
  const int n = static_cast<int>(samples.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double dx = samples[j].x - samples[i].x;
      const double dy = samples[j].y - samples[i].y;
      if (dx * dx + dy * dy > cd2) continue;
      if (segment_collides(grid, samples[i], samples[j])) continue;
      const double w = edge_length(samples[i], samples[j]);
      rm.adjacency[i].emplace_back(j, w);
      rm.adjacency[j].emplace_back(i, w);
    }
  }
  return rm;
}

std::optional<std::vector<int>> dijkstra_indices(const Roadmap& roadmap,
                                                 int source_index,
                                                 int goal_index) {
  const int n = static_cast<int>(roadmap.vertices.size());
  if (source_index < 0 || source_index >= n || goal_index < 0 ||
      goal_index >= n)
    throw std::invalid_argument("dijkstra: vertex index out of range");

  std::vector<double> dist(n, std::numeric_limits<double>::infinity());
  std::vector<int> prev(n, -1);
  std::vector<char> done(n, 0);
  using Item = std::pair<double, int>;  // (dist, index): index breaks ties
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> queue;
  dist[source_index] = 0.0;
  queue.push({0.0, source_index});
  while (!queue.empty()) {
    const auto [d, u] = queue.top();
    queue.pop();
    if (done[u]) continue;
    done[u] = 1;
    if (u == goal_index) break;
    for (const auto& [v, w] : roadmap.adjacency[u]) {
      if (done[v]) continue;
      const double cand = d + w;
      if (cand < dist[v]) {
        dist[v] = cand;
        prev[v] = u;
        queue.push({cand, v});
      }
    }
  }
  if (!done[goal_index]) return std::nullopt;

  std::vector<int> order;
  for (int v = goal_index; v != -1; v = prev[v]) order.push_back(v);
  std::reverse(order.begin(), order.end());
  return order;
}

std::optional<PolylinePath> dijkstra(const Roadmap& roadmap, int source_index,
                                     int goal_index) {
  const auto order = dijkstra_indices(roadmap, source_index, goal_index);
  if (!order) return std::nullopt;
  PolylinePath path;
  path.nodes.reserve(order->size());
  for (int idx : *order) path.nodes.push_back(roadmap.vertices[idx]);
  return path;
}

PlanResult plan(const OccupancyGrid& grid, Point2 start, Point2 goal,
                const PlanParams& params) {
  const auto t0 = std::chrono::steady_clock::now();
  OccupancyGrid inflated = inflate(grid, params.inflation_radius);
  if (!is_free(inflated, start))
    throw PlacementError("plan: start (" + fmt9(start.x) + ", " +
                         fmt9(start.y) + ") is not free on the inflated map");
  if (!is_free(inflated, goal))
    throw PlacementError("plan: goal (" + fmt9(goal.x) + ", " + fmt9(goal.y) +
                         ") is not free on the inflated map");

  std::vector<Point2> pts = sample_free(inflated, params.node_count, params.seed);
  const int start_index = static_cast<int>(pts.size());
  pts.push_back(start);
  const int goal_index = static_cast<int>(pts.size());
  pts.push_back(goal);

  Roadmap roadmap = build_roadmap(inflated, pts, params.connection_distance);
  roadmap.params.node_count = params.node_count;
  roadmap.params.seed = params.seed;

  std::optional<PolylinePath> path = dijkstra(roadmap, start_index, goal_index);
  const std::chrono::duration<double> elapsed =
      std::chrono::steady_clock::now() - t0;

  PlanStats stats;
  stats.build_seconds = elapsed.count();
  stats.sample_count = roadmap.vertices.size();
  stats.edge_count = roadmap.edge_count();
  stats.path_node_count = path ? path->nodes.size() : 0;
  return PlanResult{std::move(path), stats, std::move(roadmap),
                    std::move(inflated)};
}

void write_roadmap(const Roadmap& roadmap, std::ostream& out) {
  for (const Point2& v : roadmap.vertices)
    out << "v " << fmt9(v.x) << ' ' << fmt9(v.y) << '\n';
  for (std::size_t i = 0; i < roadmap.adjacency.size(); ++i) {
    std::vector<int> nbrs;
    for (const auto& [j, w] : roadmap.adjacency[i])
      if (j > static_cast<int>(i)) nbrs.push_back(j);
    std::sort(nbrs.begin(), nbrs.end());
    for (int j : nbrs) out << "e " << i << ' ' << j << '\n';
  }
}

Roadmap read_roadmap(std::istream& in) {
  Roadmap rm;
  std::vector<std::pair<int, int>> edges;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream ls(line);
    char tag = 0;
    ls >> tag;
    if (tag == 'v') {
      Point2 p;
      if (!(ls >> p.x >> p.y))
        throw ParseError("roadmap line " + std::to_string(line_no) +
                         ": expected 'v x y'");
      rm.vertices.push_back(p);
    } else if (tag == 'e') {
      int i = 0, j = 0;
      if (!(ls >> i >> j))
        throw ParseError("roadmap line " + std::to_string(line_no) +
                         ": expected 'e i j'");
      edges.emplace_back(i, j);
    } else {
      throw ParseError("roadmap line " + std::to_string(line_no) +
                       ": unknown record '" + std::string(1, tag) + "'");
    }
  }
  rm.adjacency.assign(rm.vertices.size(), {});
  const int n = static_cast<int>(rm.vertices.size());
  for (const auto& [i, j] : edges) {
    if (i < 0 || i >= n || j < 0 || j >= n)
      throw ParseError("roadmap: edge index out of range");
    const double w = edge_length(rm.vertices[i], rm.vertices[j]);
    rm.adjacency[i].emplace_back(j, w);
    rm.adjacency[j].emplace_back(i, w);
  }
  rm.params.node_count = n;
  return rm;
}

}  // namespace arcpath
