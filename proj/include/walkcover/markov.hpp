#pragma once

#include <algorithm>
#include <cstdio>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "walkcover/grid.hpp"
#include "walkcover/movement.hpp"

namespace walkcover {

// Layout of the chain's state space. Plain has one state per node;
// DirectionAugmented has one state per (entry direction, node) pair stored
// as d * nodes + node, so block d holds the probabilities of being in each
// node having entered it from direction d.
struct StateIndexing {
  enum class Scheme { Plain, DirectionAugmented };

  Scheme scheme = Scheme::Plain;
  int nodes = 0;
  int directions = 1;

  static StateIndexing plain(int nodes) {
    return {Scheme::Plain, nodes, 1};
  }

  static StateIndexing direction_augmented(int nodes, int directions) {
    return {Scheme::DirectionAugmented, nodes, directions};
  }

  int dim() const { return nodes * directions; }

  int state(Direction d, NodeId node) const {
    return scheme == Scheme::Plain ? node : d.index * nodes + node;
  }

  friend bool operator==(const StateIndexing&, const StateIndexing&) = default;
};

// Row-sparse transition matrix. Each row holds its nonzero (column,
// probability) pairs sorted by column, and sums to 1.
struct SparseStochasticMatrix {
  struct Entry {
    int col = 0;
    double prob = 0.0;

    friend bool operator==(const Entry&, const Entry&) = default;
  };

  StateIndexing indexing;
  std::vector<std::vector<Entry>> rows;

  int dim() const { return static_cast<int>(rows.size()); }

  friend bool operator==(const SparseStochasticMatrix&,
                         const SparseStochasticMatrix&) = default;
};

// Probability vector over the chain's states plus the number of steps it
// has been evolved.
struct StateDistribution {
  std::vector<double> entries;
  int step = 0;
};

namespace detail {

inline void add_entry(std::vector<SparseStochasticMatrix::Entry>& row, int col,
                      double prob) {
  for (auto& e : row) {
    if (e.col == col) {
      e.prob += prob;
      return;
    }
  }
  row.push_back({col, prob});
}

inline void sort_row(std::vector<SparseStochasticMatrix::Entry>& row) {
  std::sort(row.begin(), row.end(),
            [](const auto& a, const auto& b) { return a.col < b.col; });
}

}  // namespace detail

// Transition matrix of the walk. Uniform walks live on the plain state
// space; biased walks on the direction-augmented one, where row (d, i)
// distributes the heading probabilities q over columns (d', neighbor(i, d')).
inline SparseStochasticMatrix build_transition_matrix(
    const TorusGrid& grid, const MovementModel& model) {
  const int n_nodes = grid.node_count();
  const int degree = grid.degree();
  SparseStochasticMatrix m;

  if (model.kind == MovementModel::Kind::Uniform) {
    m.indexing = StateIndexing::plain(n_nodes);
    m.rows.resize(static_cast<std::size_t>(n_nodes));
    for (NodeId i = 0; i < n_nodes; ++i) {
      auto& row = m.rows[static_cast<std::size_t>(i)];
      for (int d = 0; d < degree; ++d)
        detail::add_entry(row, grid.neighbor(i, Direction{d}), 1.0 / degree);
      detail::sort_row(row);
    }
    return m;
  }

  m.indexing = StateIndexing::direction_augmented(n_nodes, degree);
  m.rows.resize(static_cast<std::size_t>(m.indexing.dim()));
  for (int d = 0; d < degree; ++d) {
    const std::vector<double> q =
        heading_distribution(model, grid, Direction{d});
    for (NodeId i = 0; i < n_nodes; ++i) {
      auto& row = m.rows[static_cast<std::size_t>(d * n_nodes + i)];
      for (int dp = 0; dp < degree; ++dp) {
        if (q[static_cast<std::size_t>(dp)] == 0.0) continue;
        detail::add_entry(row,
                          dp * n_nodes + grid.neighbor(i, Direction{dp}),
                          q[static_cast<std::size_t>(dp)]);
      }
      detail::sort_row(row);
    }
  }
  return m;
}

// Makes the start node absorbing: its row (one row per direction block on
// an augmented chain) becomes the unit row onto itself. All other rows are
// left untouched. Idempotent.
inline SparseStochasticMatrix absorb_start(SparseStochasticMatrix m, NodeId s) {
  if (s < 0 || s >= m.indexing.nodes)
    throw std::domain_error("absorb_start: start node out of range");
  for (int d = 0; d < m.indexing.directions; ++d) {
    const int state = d * m.indexing.nodes + s;
    m.rows[static_cast<std::size_t>(state)] = {{state, 1.0}};
  }
  return m;
}

// Distribution reached after one step of the UNABSORBED matrix from a point
// mass at the start node (plain) or at (d0, start) (direction-augmented).
// This is the chain's v at step 0.
inline StateDistribution initial_distribution(
    const SparseStochasticMatrix& m, NodeId s,
    std::optional<Direction> d0 = std::nullopt) {
  const StateIndexing& idx = m.indexing;
  if (s < 0 || s >= idx.nodes)
    throw std::domain_error("initial_distribution: start node out of range");
  const bool augmented = idx.scheme == StateIndexing::Scheme::DirectionAugmented;
  if (augmented && !d0)
    throw std::domain_error(
        "initial_distribution: direction-augmented chain needs an initial "
        "direction");
  if (!augmented && d0)
    throw std::domain_error(
        "initial_distribution: plain chain takes no initial direction");
  if (augmented && (d0->index < 0 || d0->index >= idx.directions))
    throw std::domain_error("initial_distribution: invalid initial direction");

  StateDistribution v;
  v.entries.assign(static_cast<std::size_t>(idx.dim()), 0.0);
  const int start_state = augmented ? idx.state(*d0, s) : s;
  for (const auto& e : m.rows[static_cast<std::size_t>(start_state)])
    v.entries[static_cast<std::size_t>(e.col)] += e.prob;
  v.step = 0;
  return v;
}

// One evolution step, v' = v M, as a single pass over the nonzeros.
inline StateDistribution step(const StateDistribution& v,
                              const SparseStochasticMatrix& m) {
  if (static_cast<int>(v.entries.size()) != m.dim())
    throw std::domain_error("step: distribution/matrix dimension mismatch");
  StateDistribution out;
  out.entries.assign(v.entries.size(), 0.0);
  for (std::size_t i = 0; i < v.entries.size(); ++i) {
    const double vi = v.entries[i];
    if (vi == 0.0) continue;
    for (const auto& e : m.rows[i])
      out.entries[static_cast<std::size_t>(e.col)] += vi * e.prob;
  }
  out.step = v.step + 1;
  return out;
}

// Total probability of the start node: v_s on a plain chain, the sum over
// direction blocks on an augmented one.
inline double start_mass(const StateDistribution& v,
                         const StateIndexing& indexing, NodeId s) {
  if (s < 0 || s >= indexing.nodes)
    throw std::domain_error("start_mass: start node out of range");
  double total = 0.0;
  for (int d = 0; d < indexing.directions; ++d)
    total += v.entries[static_cast<std::size_t>(d * indexing.nodes + s)];
  return total;
}

// Debug dump, one "row col prob" line per nonzero, rows ascending. Not a
// stability-guaranteed format.
inline void dump_triplets(const SparseStochasticMatrix& m, std::ostream& out) {
  char buf[64];
  for (int i = 0; i < m.dim(); ++i) {
    for (const auto& e : m.rows[static_cast<std::size_t>(i)]) {
      std::snprintf(buf, sizeof buf, "%d %d %.12g\n", i, e.col, e.prob);
      out << buf;
    }
  }
}

}  // namespace walkcover
