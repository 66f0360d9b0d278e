#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dmapf {

// Grid cell. x is the column, y is the row, both 0-based. Ordering is
// row-major (y first) and is the canonical tie-breaking order everywhere.
struct Position {
  int x = 0;
  int y = 0;

  friend bool operator==(const Position&, const Position&) = default;
  friend std::strong_ordering operator<=>(const Position& a,
                                          const Position& b) {
    if (auto c = a.y <=> b.y; c != 0) return c;
    return a.x <=> b.x;
  }
};

std::string to_string(const Position& p);

// Rectangular grid with statically blocked cells. Immutable after
// construction; safe to share across concurrent solver runs.
class GridMap {
 public:
  GridMap(int width, int height, const std::vector<Position>& blocked = {});

  int width() const { return width_; }
  int height() const { return height_; }
  int cell_count() const { return width_ * height_; }

  bool in_bounds(const Position& p) const {
    return p.x >= 0 && p.x < width_ && p.y >= 0 && p.y < height_;
  }
  bool blocked(const Position& p) const { return blocked_[index(p)]; }
  bool passable(const Position& p) const {
    return in_bounds(p) && !blocked(p);
  }

  int index(const Position& p) const { return p.y * width_ + p.x; }
  Position position(int index) const {
    return Position{index % width_, index / width_};
  }

  int free_cell_count() const;
  std::vector<Position> blocked_cells() const;

 private:
  int width_;
  int height_;
  std::vector<std::uint8_t> blocked_;
};

// Cells reachable from p in one step: p itself (wait) plus the passable
// 4-neighbours, sorted in canonical order. Throws std::invalid_argument if p
// is out of bounds or blocked.
std::vector<Position> neighbors(const GridMap& grid, const Position& p);

// BFS distance in unit moves between two passable cells; nullopt when
// disconnected.
std::optional<int> shortest_distance(const GridMap& grid, const Position& a,
                                     const Position& b);

// BFS distance from `from` to every cell; -1 marks unreachable cells.
// Indexed by GridMap::index.
std::vector<int> distance_map(const GridMap& grid, const Position& from);

// The corner-to-corner horizon convention: shortest-path distance between
// (0,0) and (w-1,h-1). Equals w+h-2 on an obstacle-free grid. Throws
// NoAutoMakespanError when the corners are blocked or disconnected.
int auto_makespan(const GridMap& grid);

}  // namespace dmapf
