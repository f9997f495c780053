#pragma once

#include <array>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace walkcover {

using NodeId = int;

enum class Topology { Ring, Torus8 };

// Heading of the agent, as an index into the grid's direction set.
// Torus8 enumerates the eight compass directions counter-clockwise from
// east (index 0, angle 0) in 45-degree steps; Ring has east (0) and west (1).
struct Direction {
  int index = 0;

  friend constexpr bool operator==(Direction, Direction) = default;
};

namespace dir {
inline constexpr Direction east{0};
inline constexpr Direction northeast{1};
inline constexpr Direction north{2};
inline constexpr Direction northwest{3};
inline constexpr Direction west{4};
inline constexpr Direction southwest{5};
inline constexpr Direction south{6};
inline constexpr Direction southeast{7};
inline constexpr Direction ring_east{0};
inline constexpr Direction ring_west{1};
}  // namespace dir

// Regular toroidal topology: a 1-D ring (2 neighbours per node) or a 2-D
// grid with 8 neighbours per node and wrap-around on all edges. Node ids
// are row-major: node_index(row, col) = row * cols + col. Immutable after
// construction, so instances can be shared freely across threads.
class TorusGrid {
 public:
  static TorusGrid ring(int nodes) {
    if (nodes < 2) throw std::domain_error("ring grid needs at least 2 nodes");
    return TorusGrid(Topology::Ring, 1, nodes);
  }

  static TorusGrid torus8(int rows, int cols) {
    // Below 3x3 the eight neighbour offsets stop being distinct nodes.
    if (rows < 3 || cols < 3)
      throw std::domain_error("torus8 grid needs rows >= 3 and cols >= 3");
    return TorusGrid(Topology::Torus8, rows, cols);
  }

  Topology kind() const { return kind_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int node_count() const { return rows_ * cols_; }
  int degree() const { return kind_ == Topology::Ring ? 2 : 8; }

  NodeId node_index(int row, int col) const {
    if (row < 0 || row >= rows_ || col < 0 || col >= cols_)
      throw std::domain_error("node_index: row/col out of range");
    return row * cols_ + col;
  }

  bool valid_direction(Direction d) const {
    return d.index >= 0 && d.index < degree();
  }

  // One step from `node` in direction `d`, wrapping modulo rows/cols.
  NodeId neighbor(NodeId node, Direction d) const {
    check_node(node);
    check_direction(d);
    if (kind_ == Topology::Ring) {
      const int delta = d.index == 0 ? 1 : -1;
      return (node + delta + cols_) % cols_;
    }
    const auto [dr, dc] = kOffsets[static_cast<std::size_t>(d.index)];
    const int row = (node / cols_ + dr + rows_) % rows_;
    const int col = (node % cols_ + dc + cols_) % cols_;
    return row * cols_ + col;
  }

  Direction turned(Direction d, int delta) const {
    check_direction(d);
    const int n = degree();
    return Direction{((d.index + delta) % n + n) % n};
  }

  Direction opposite(Direction d) const { return turned(d, degree() / 2); }

  double angle(Direction d) const {
    check_direction(d);
    const double unit =
        kind_ == Topology::Ring ? std::numbers::pi : std::numbers::pi / 4.0;
    return d.index * unit;
  }

  // Centre node, the conventional default start for coverage runs.
  NodeId center_node() const { return node_index(rows_ / 2, cols_ / 2); }

 private:
  TorusGrid(Topology kind, int rows, int cols)
      : kind_(kind), rows_(rows), cols_(cols) {}

  void check_node(NodeId node) const {
    if (node < 0 || node >= node_count())
      throw std::domain_error("node id out of range");
  }

  void check_direction(Direction d) const {
    if (!valid_direction(d))
      throw std::domain_error("direction invalid for this grid");
  }

  // (row, col) offsets counter-clockwise from east; the row axis points
  // south, so north is row - 1.
  static constexpr std::array<std::pair<int, int>, 8> kOffsets = {{
      {0, 1},    // east
      {-1, 1},   // northeast
      {-1, 0},   // north
      {-1, -1},  // northwest
      {0, -1},   // west
      {1, -1},   // southwest
      {1, 0},    // south
      {1, 1},    // southeast
  }};

  Topology kind_;
  int rows_;
  int cols_;
};

}  // namespace walkcover
