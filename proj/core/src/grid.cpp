#include "dmapf/grid.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "dmapf/errors.hpp"

namespace dmapf {

std::string to_string(const Position& p) {
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

GridMap::GridMap(int width, int height, const std::vector<Position>& blocked)
    : width_(width), height_(height) {
  if (width <= 0 || height <= 0) {
    throw std::invalid_argument("grid dimensions must be positive");
  }
  blocked_.assign(static_cast<std::size_t>(width) * height, 0);
  for (const Position& p : blocked) {
    if (!in_bounds(p)) {
      throw std::invalid_argument("blocked cell " + to_string(p) +
                                  " out of bounds");
    }
    blocked_[index(p)] = 1;
  }
}

int GridMap::free_cell_count() const {
  return cell_count() -
         static_cast<int>(std::count(blocked_.begin(), blocked_.end(), 1));
}

std::vector<Position> GridMap::blocked_cells() const {
  std::vector<Position> out;
  for (int i = 0; i < cell_count(); ++i) {
    if (blocked_[i]) out.push_back(position(i));
  }
  return out;
}

std::vector<Position> neighbors(const GridMap& grid, const Position& p) {
  if (!grid.in_bounds(p)) {
    throw std::invalid_argument("neighbors: " + to_string(p) +
                                " out of bounds");
  }
  if (grid.blocked(p)) {
    throw std::invalid_argument("neighbors: " + to_string(p) + " is blocked");
  }
  std::vector<Position> out;
  out.reserve(5);
  const Position candidates[5] = {{p.x, p.y - 1}, {p.x - 1, p.y}, p,
                                  {p.x + 1, p.y}, {p.x, p.y + 1}};
  for (const Position& q : candidates) {
    if (grid.passable(q)) out.push_back(q);
  }
  return out;  // candidate order is already canonical (y, then x)
}

std::vector<int> distance_map(const GridMap& grid, const Position& from) {
  if (!grid.passable(from)) {
    throw std::invalid_argument("distance_map: source " + to_string(from) +
                                " not passable");
  }
  std::vector<int> dist(grid.cell_count(), -1);
  std::deque<Position> queue{from};
  dist[grid.index(from)] = 0;
  while (!queue.empty()) {
    Position p = queue.front();
    queue.pop_front();
    int d = dist[grid.index(p)];
    for (const Position& q : neighbors(grid, p)) {
      if (q == p) continue;
      int& dq = dist[grid.index(q)];
      if (dq < 0) {
        dq = d + 1;
        queue.push_back(q);
      }
    }
  }
  return dist;
}

std::optional<int> shortest_distance(const GridMap& grid, const Position& a,
                                     const Position& b) {
  if (!grid.passable(a) || !grid.passable(b)) {
    throw std::invalid_argument("shortest_distance: endpoints must be free");
  }
  if (a == b) return 0;
  std::vector<int> dist = distance_map(grid, a);
  int d = dist[grid.index(b)];
  if (d < 0) return std::nullopt;
  return d;
}

int auto_makespan(const GridMap& grid) {
  Position origin{0, 0};
  Position opposite{grid.width() - 1, grid.height() - 1};
  if (!grid.passable(origin) || !grid.passable(opposite)) {
    throw NoAutoMakespanError("corner cells are blocked");
  }
  std::optional<int> d = shortest_distance(grid, origin, opposite);
  if (!d) throw NoAutoMakespanError("opposite corners are disconnected");
  return *d;
}

}  // namespace dmapf
