#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "walkcover/coverage.hpp"
#include "walkcover/rng.hpp"

namespace walkcover {

// Single agent walking the grid, sampling each heading from the movement
// model's distribution conditioned on the previous heading.
class Walker {
 public:
  Walker(const TorusGrid& grid, const MovementModel& model, NodeId start,
         Direction d0)
      : grid_(&grid), node_(start), heading_(d0) {
    if (start < 0 || start >= grid.node_count())
      throw std::domain_error("Walker: start node out of range");
    if (!grid.valid_direction(d0))
      throw std::domain_error("Walker: invalid initial direction");
    const int degree = grid.degree();
    cdf_.resize(static_cast<std::size_t>(degree));
    for (int d = 0; d < degree; ++d) {
      const auto q = heading_distribution(model, grid, Direction{d});
      auto& row = cdf_[static_cast<std::size_t>(d)];
      row.resize(q.size());
      double acc = 0.0;
      for (std::size_t j = 0; j < q.size(); ++j) {
        acc += q[j];
        row[j] = acc;
      }
      row.back() = 1.0;  // row sums are 1 within 1e-12; pin the tail exactly
    }
  }

  NodeId node() const { return node_; }
  Direction heading() const { return heading_; }

  void reset(NodeId start, Direction d0) {
    node_ = start;
    heading_ = d0;
  }

  // Advances one step and returns the node reached.
  NodeId step(Xoshiro256pp& rng) {
    const auto& cdf = cdf_[static_cast<std::size_t>(heading_.index)];
    const double u = rng.uniform();
    std::size_t j = 0;
    while (cdf[j] <= u) ++j;  // first j with cdf[j] > u; never a zero slot
    heading_ = Direction{static_cast<int>(j)};
    node_ = grid_->neighbor(node_, heading_);
    return node_;
  }

 private:
  const TorusGrid* grid_;
  std::vector<std::vector<double>> cdf_;
  NodeId node_;
  Direction heading_;
};

// Node sequence of one seeded run: element 0 is the start node, element t
// the node after t steps.
inline std::vector<NodeId> simulate_run(const TorusGrid& grid,
                                        const MovementModel& model, NodeId s,
                                        Direction d0, Xoshiro256pp& rng,
                                        int max_steps) {
  Walker walker(grid, model, s, d0);
  std::vector<NodeId> nodes;
  nodes.reserve(static_cast<std::size_t>(max_steps) + 1);
  nodes.push_back(s);
  for (int t = 0; t < max_steps; ++t) nodes.push_back(walker.step(rng));
  return nodes;
}

struct SimulationConfig {
  TorusGrid grid;
  MovementModel model;
  NodeId start = 0;
  Direction initial_direction = dir::east;
  int runs = 0;
  int max_steps = 0;
  std::uint64_t seed = 0;
};

// Empirical aggregates over seeded runs, indexed to align with the macro
// chain: index k corresponds to the absorbed chain's v at step k, which is
// the walk after k+1 agent steps. So returned_by_step[k] is the fraction of
// runs back at the start within k+1 steps (the estimator of start_mass at
// step k), while mean_distinct[k] counts distinct nodes after k steps (the
// estimator of C_k).
struct EmpiricalTrace {
  std::vector<double> returned_by_step;
  std::vector<double> mean_distinct;
  std::vector<double> mean_distinct_se;
  std::vector<std::optional<int>> coverage_times;  // per-run; empty if unreached
};

inline EmpiricalTrace empirical_trace(const SimulationConfig& config,
                                      double target_fraction) {
  if (config.runs < 1)
    throw std::domain_error("empirical_trace: runs must be >= 1");
  if (config.max_steps < 1)
    throw std::domain_error("empirical_trace: max_steps must be >= 1");
  if (!(target_fraction > 0.0 && target_fraction <= 1.0))
    throw std::domain_error("empirical_trace: target fraction must be in (0, 1]");

  const int n_nodes = config.grid.node_count();
  const int max_k = config.max_steps;
  const double target = target_fraction * n_nodes;

  // Integer accumulators keep the aggregation exact and independent of run
  // order.
  std::vector<std::int64_t> first_return_hist(
      static_cast<std::size_t>(max_k) + 2, 0);
  std::vector<std::int64_t> distinct_sum(static_cast<std::size_t>(max_k) + 1, 0);
  std::vector<std::int64_t> distinct_sumsq(static_cast<std::size_t>(max_k) + 1,
                                           0);

  EmpiricalTrace trace;
  trace.coverage_times.reserve(static_cast<std::size_t>(config.runs));

  Walker walker(config.grid, config.model, config.start,
                config.initial_direction);
  std::vector<char> visited(static_cast<std::size_t>(n_nodes));
  for (int run = 0; run < config.runs; ++run) {
    Xoshiro256pp rng = Xoshiro256pp::for_run(config.seed,
                                             static_cast<std::uint64_t>(run));
    walker.reset(config.start, config.initial_direction);
    std::fill(visited.begin(), visited.end(), 0);
    visited[static_cast<std::size_t>(config.start)] = 1;
    int distinct = 1;
    int first_return = 0;  // 0 = not seen yet
    std::optional<int> covered_at;
    if (1.0 >= target) covered_at = 0;
    distinct_sum[0] += 1;
    distinct_sumsq[0] += 1;

    // One step past max_k so return-within-(max_k + 1) is decided.
    for (int t = 1; t <= max_k + 1; ++t) {
      const NodeId node = walker.step(rng);
      if (node == config.start && first_return == 0) first_return = t;
      if (!visited[static_cast<std::size_t>(node)]) {
        visited[static_cast<std::size_t>(node)] = 1;
        ++distinct;
      }
      if (t <= max_k) {
        if (!covered_at && distinct >= target) covered_at = t;
        distinct_sum[static_cast<std::size_t>(t)] += distinct;
        distinct_sumsq[static_cast<std::size_t>(t)] +=
            static_cast<std::int64_t>(distinct) * distinct;
      }
    }
    if (first_return > 0)
      ++first_return_hist[static_cast<std::size_t>(first_return)];
    trace.coverage_times.push_back(covered_at);
  }

  trace.returned_by_step.resize(static_cast<std::size_t>(max_k) + 1);
  trace.mean_distinct.resize(static_cast<std::size_t>(max_k) + 1);
  trace.mean_distinct_se.resize(static_cast<std::size_t>(max_k) + 1);
  const double runs = config.runs;
  std::int64_t returned = 0;
  for (int k = 0; k <= max_k; ++k) {
    returned += first_return_hist[static_cast<std::size_t>(k) + 1];
    trace.returned_by_step[static_cast<std::size_t>(k)] = returned / runs;
    const double mean = distinct_sum[static_cast<std::size_t>(k)] / runs;
    trace.mean_distinct[static_cast<std::size_t>(k)] = mean;
    const double variance =
        distinct_sumsq[static_cast<std::size_t>(k)] / runs - mean * mean;
    trace.mean_distinct_se[static_cast<std::size_t>(k)] =
        std::sqrt(std::max(0.0, variance) / runs);
  }
  return trace;
}

struct ValidationRow {
  int step = 0;
  double macro_return = 0.0;
  double empirical_return = 0.0;
  double return_se = 0.0;
  double macro_covered = 0.0;
  double empirical_covered = 0.0;
  double covered_se = 0.0;
  bool return_ok = false;
  bool covered_ok = false;
};

struct ValidationReport {
  std::vector<ValidationRow> rows;
  bool pass = true;
};

// Step-by-step comparison of the macro trace against empirical aggregates.
// Return probabilities use the binomial standard error implied by the macro
// value; distinct-node counts use the empirical standard error of the mean.
inline ValidationReport validate_trace(const CoverageTrace& macro,
                                       const EmpiricalTrace& empirical,
                                       int runs, double se_band = 4.0) {
  ValidationReport report;
  const std::size_t count = std::min(
      {macro.start_mass.size(), macro.cumulative.size(),
       empirical.returned_by_step.size(), empirical.mean_distinct.size()});
  for (std::size_t k = 0; k < count; ++k) {
    ValidationRow row;
    row.step = static_cast<int>(k);
    row.macro_return = macro.start_mass[k];
    row.empirical_return = empirical.returned_by_step[k];
    row.return_se =
        std::sqrt(row.macro_return * (1.0 - row.macro_return) / runs);
    row.return_ok = std::abs(row.empirical_return - row.macro_return) <=
                    se_band * row.return_se + 1e-12;
    row.macro_covered = macro.cumulative[k];
    row.empirical_covered = empirical.mean_distinct[k];
    row.covered_se = empirical.mean_distinct_se[k];
    row.covered_ok = std::abs(row.empirical_covered - row.macro_covered) <=
                     se_band * row.covered_se + 1e-12;
    report.pass = report.pass && row.return_ok && row.covered_ok;
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace walkcover
