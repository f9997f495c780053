#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "walkcover/markov.hpp"

namespace walkcover {

// Expected-coverage trace of an absorbed chain.
//
// gamma[k] is the expected number of new nodes covered at step k (gamma[0]
// is 1, the start node itself), cumulative[k] the running total C_k, and
// start_mass[k] the absorbed chain's probability of having returned to the
// start within k+1 agent steps. gamma[k] = 1 - start_mass[k-1] for k >= 1:
// the chance that step k lands on a fresh node equals the chance of no
// return so far, by the homogeneity of the torus.
struct CoverageTrace {
  std::vector<double> gamma;
  std::vector<double> cumulative;
  std::vector<double> start_mass;
  int node_count = 0;
  bool truncated = false;
};

struct CoverageResult {
  std::optional<int> coverage_time;  // smallest k with C_k >= target * N
  double target_fraction = 0.0;
  CoverageTrace trace;
  MovementModel model;
  int rows = 0;
  int cols = 0;
};

// Generous cap on chain evolution; walks that cannot cover (bias 1) stop
// here and report a truncated trace.
inline int default_max_steps(const TorusGrid& grid) {
  return 200 * grid.node_count() * grid.degree();
}

inline CoverageResult coverage_trace(const TorusGrid& grid,
                                     const MovementModel& model, NodeId s,
                                     std::optional<Direction> d0,
                                     double target_fraction, int max_steps) {
  if (!(target_fraction > 0.0 && target_fraction <= 1.0))
    throw std::domain_error("coverage_trace: target fraction must be in (0, 1]");
  if (max_steps < 1)
    throw std::domain_error("coverage_trace: max_steps must be >= 1");

  SparseStochasticMatrix m = build_transition_matrix(grid, model);
  StateDistribution v = initial_distribution(m, s, d0);
  const SparseStochasticMatrix absorbed = absorb_start(std::move(m), s);

  CoverageResult result;
  result.target_fraction = target_fraction;
  result.model = model;
  result.rows = grid.rows();
  result.cols = grid.cols();

  CoverageTrace& trace = result.trace;
  trace.node_count = grid.node_count();
  trace.gamma.push_back(1.0);
  trace.cumulative.push_back(1.0);
  trace.start_mass.push_back(start_mass(v, absorbed.indexing, s));

  const double target = target_fraction * grid.node_count();
  int k = 0;
  while (trace.cumulative.back() < target && k < max_steps) {
    ++k;
    const double gamma = 1.0 - trace.start_mass[static_cast<std::size_t>(k - 1)];
    trace.gamma.push_back(gamma);
    trace.cumulative.push_back(trace.cumulative.back() + gamma);
    v = step(v, absorbed);
    trace.start_mass.push_back(start_mass(v, absorbed.indexing, s));
  }

  if (trace.cumulative.back() >= target)
    result.coverage_time = k;
  else
    trace.truncated = true;
  return result;
}

struct SweepPoint {
  double bias = 0.0;
  std::optional<int> coverage_time;  // empty when the trace truncated
};

struct SweepResult {
  std::vector<SweepPoint> points;
  std::optional<int> baseline;  // uniform-walk coverage time, same grid/target
  double r = 0.0;
};

// Coverage time per bias value, plus the uniform baseline. r = 0 runs the
// plain biased model, r > 0 the biased model with random steps. All entries
// share the grid's centre start and an eastward initial heading.
inline SweepResult sweep_bias(const TorusGrid& grid,
                              const std::vector<double>& biases, double r,
                              double target_fraction, int max_steps) {
  if (biases.empty()) throw std::domain_error("sweep_bias: no bias values");
  SweepResult sweep;
  sweep.r = r;
  const NodeId s = grid.center_node();
  sweep.baseline = coverage_trace(grid, MovementModel::uniform(), s,
                                  std::nullopt, target_fraction, max_steps)
                       .coverage_time;
  for (double p : biases) {
    const MovementModel model = r == 0.0
                                    ? MovementModel::biased(p)
                                    : MovementModel::biased_with_random(p, r);
    sweep.points.push_back(
        {p, coverage_trace(grid, model, s, dir::east, target_fraction,
                           max_steps)
                .coverage_time});
  }
  return sweep;
}

struct BisectionIterate {
  double lo = 0.0;
  double hi = 0.0;
  double bias = 0.0;
  std::optional<int> coverage_time;
};

enum class CrossoverStatus { Found, NoCrossover, Ambiguous };

struct CrossoverResult {
  CrossoverStatus status = CrossoverStatus::NoCrossover;
  double bias = 0.0;  // meaningful when status == Found
  std::optional<int> baseline;
  std::vector<BisectionIterate> iterates;
};

// Bias at which the biased walk's coverage time crosses the uniform
// baseline, located by bisection on the sign of the difference over
// [0, 0.95]. Requires bracketing: below the baseline at bias 0, above it at
// 0.95. Coverage time is integer-valued, so the result is the midpoint of
// the final bracket; the flip is then re-checked to be unique inside it.
inline CrossoverResult crossover_bias(const TorusGrid& grid, double r,
                                      double target_fraction, int max_steps,
                                      double tolerance = 0.005) {
  if (tolerance <= 0.0)
    throw std::domain_error("crossover_bias: tolerance must be positive");
  constexpr double kBiasHi = 0.95;

  CrossoverResult result;
  const NodeId s = grid.center_node();
  result.baseline = coverage_trace(grid, MovementModel::uniform(), s,
                                   std::nullopt, target_fraction, max_steps)
                        .coverage_time;
  if (!result.baseline) return result;  // baseline itself truncated

  auto evaluate = [&](double p, double lo, double hi) {
    const MovementModel model = r == 0.0
                                    ? MovementModel::biased(p)
                                    : MovementModel::biased_with_random(p, r);
    auto ct = coverage_trace(grid, model, s, dir::east, target_fraction,
                             max_steps)
                  .coverage_time;
    result.iterates.push_back({lo, hi, p, ct});
    return ct;
  };
  // A truncated trace never covered, so it counts as above the baseline.
  auto above = [&](const std::optional<int>& ct) {
    return !ct || *ct > *result.baseline;
  };

  double lo = 0.0;
  double hi = kBiasHi;
  if (above(evaluate(lo, lo, hi))) return result;
  if (!above(evaluate(hi, lo, hi))) return result;

  while (hi - lo > tolerance) {
    const double mid = 0.5 * (lo + hi);
    if (above(evaluate(mid, lo, hi)))
      hi = mid;
    else
      lo = mid;
  }

  // Scan the final bracket left to right: once a point sits above the
  // baseline, none after it may fall back to or below it.
  bool seen_above = false;
  for (int i = 1; i <= 4; ++i) {
    const bool is_above = above(evaluate(lo + i * (hi - lo) / 5.0, lo, hi));
    if (seen_above && !is_above) {
      result.status = CrossoverStatus::Ambiguous;
      return result;
    }
    seen_above = seen_above || is_above;
  }

  result.status = CrossoverStatus::Found;
  result.bias = 0.5 * (lo + hi);
  return result;
}

struct SizeSweepEntry {
  int size = 0;  // square grid side
  CrossoverResult crossover;
};

// Cross-over bias across square torus8 grids, min_size to max_size
// inclusive. max_steps = 0 picks the per-grid default cap.
inline std::vector<SizeSweepEntry> sweep_size(int min_size, int max_size,
                                              int size_step, double r,
                                              double target_fraction,
                                              int max_steps = 0) {
  if (min_size < 3 || max_size < min_size || size_step < 1)
    throw std::domain_error("sweep_size: invalid size range");
  std::vector<SizeSweepEntry> entries;
  for (int n = min_size; n <= max_size; n += size_step) {
    const TorusGrid grid = TorusGrid::torus8(n, n);
    const int steps = max_steps > 0 ? max_steps : default_max_steps(grid);
    entries.push_back({n, crossover_bias(grid, r, target_fraction, steps)});
  }
  return entries;
}

}  // namespace walkcover
