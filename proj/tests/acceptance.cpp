// Acceptance suite: exercises the headline results end to end and prints
// one pass/fail line per criterion. Exits nonzero if any criterion fails.

#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "walkcover/coverage.hpp"
#include "walkcover/markov.hpp"
#include "walkcover/oracle.hpp"

using namespace walkcover;

namespace {

int g_failures = 0;

void report(int number, bool pass, const std::string& text) {
  std::printf("%s  criterion %2d: %s\n", pass ? "PASS" : "FAIL", number,
              text.c_str());
  if (!pass) ++g_failures;
}

std::string fmt(const char* pattern, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, pattern, args...);
  return buf;
}

bool near(double value, double expected, double tolerance) {
  return std::abs(value - expected) <= tolerance;
}

int coverage_time_or(const CoverageResult& result, int fallback = -1) {
  return result.coverage_time.value_or(fallback);
}

// ---------------------------------------------------------------------------
// 1. 1-D 5-node uniform walk: matrix, absorbed matrix and v^(0)..v^(4)
//    reproduce the dyadic fixtures exactly.
void criterion1() {
  const TorusGrid ring = TorusGrid::ring(5);
  const auto m = build_transition_matrix(ring, MovementModel::uniform());

  const std::vector<std::vector<SparseStochasticMatrix::Entry>> expected_m = {
      {{1, 0.5}, {4, 0.5}},
      {{0, 0.5}, {2, 0.5}},
      {{1, 0.5}, {3, 0.5}},
      {{2, 0.5}, {4, 0.5}},
      {{0, 0.5}, {3, 0.5}}};
  bool pass = m.rows == expected_m;

  const auto absorbed = absorb_start(m, 2);
  auto expected_absorbed = expected_m;
  expected_absorbed[2] = {{2, 1.0}};
  pass = pass && absorbed.rows == expected_absorbed;

  const std::vector<std::vector<double>> expected_v = {
      {0, 0.5, 0, 0.5, 0},
      {0.25, 0, 0.5, 0, 0.25},
      {0.125, 0.125, 0.5, 0.125, 0.125},
      {0.125, 0.0625, 0.625, 0.0625, 0.125},
      {3.0 / 32, 0.0625, 11.0 / 16, 0.0625, 3.0 / 32}};
  StateDistribution v = initial_distribution(m, 2);
  pass = pass && v.entries == expected_v[0];
  for (std::size_t k = 1; k < expected_v.size(); ++k) {
    v = step(v, absorbed);
    pass = pass && v.entries == expected_v[k];
  }
  report(1, pass, "1-D 5-node uniform fixtures are exact");
}

// 2. 1-D 5-node biased walk, p = 3/4: absorbed 10x10 matrix with unit rows
//    2 and 7, and the initial distribution, reproduce the fixtures exactly.
void criterion2() {
  const TorusGrid ring = TorusGrid::ring(5);
  const auto m = build_transition_matrix(ring, MovementModel::biased(0.75));
  const auto absorbed = absorb_start(m, 2);

  const std::vector<std::vector<SparseStochasticMatrix::Entry>> expected = {
      {{1, 0.75}, {9, 0.25}},
      {{2, 0.75}, {5, 0.25}},
      {{2, 1.0}},
      {{4, 0.75}, {7, 0.25}},
      {{0, 0.75}, {8, 0.25}},
      {{1, 0.25}, {9, 0.75}},
      {{2, 0.25}, {5, 0.75}},
      {{7, 1.0}},
      {{4, 0.25}, {7, 0.75}},
      {{0, 0.25}, {8, 0.75}}};
  bool pass = absorbed.dim() == 10 && absorbed.rows == expected;

  const auto v = initial_distribution(m, 2, dir::ring_east);
  pass = pass &&
         v.entries == std::vector<double>{0, 0, 0, 0.75, 0, 0, 0.25, 0, 0, 0};
  report(2, pass, "1-D 5-node biased (p=3/4) fixtures are exact");
}

// 3. Uniform walk on the 5x5 torus: row 0 has 1/8 exactly at columns
//    {1,4,5,6,9,20,21,24} and 0 elsewhere.
void criterion3() {
  const TorusGrid g = TorusGrid::torus8(5, 5);
  const auto m = build_transition_matrix(g, MovementModel::uniform());
  const std::vector<SparseStochasticMatrix::Entry> expected = {
      {1, 0.125},  {4, 0.125},  {5, 0.125},  {6, 0.125},
      {9, 0.125},  {20, 0.125}, {21, 0.125}, {24, 0.125}};
  report(3, m.dim() == 25 && m.rows[0] == expected,
         "5x5 uniform matrix row 0 is exact");
}

// 4. Cross-over biases within +-0.03 of 0.74 (5x5, r=0), 0.93 (15x15, r=0),
//    0.78 (5x5, r=0.1) and 0.84 (5x5, r=0.2).
void criterion4(const CrossoverResult& c55_r0, const CrossoverResult& c1515_r0,
                const CrossoverResult& c55_r01,
                const CrossoverResult& c55_r02) {
  const auto found_near = [](const CrossoverResult& c, double expected) {
    return c.status == CrossoverStatus::Found && near(c.bias, expected, 0.03);
  };
  const bool pass = found_near(c55_r0, 0.74) && found_near(c1515_r0, 0.93) &&
                    found_near(c55_r01, 0.78) && found_near(c55_r02, 0.84);
  report(4, pass,
         fmt("cross-over biases %.3f/%.3f/%.3f/%.3f vs 0.74/0.93/0.78/0.84 "
             "(+-0.03)",
             c55_r0.bias, c1515_r0.bias, c55_r01.bias, c55_r02.bias));
}

// 5. Coverage magnitudes on the 5x5 torus at 99%: bias 0 -> ~55 and bias
//    0.95 -> ~470 for r=0; ~70 and ~158 for r=0.2. Tolerance +-10%.
void criterion5() {
  const TorusGrid g = TorusGrid::torus8(5, 5);
  const NodeId s = g.center_node();
  const int max_steps = default_max_steps(g);
  const auto ct = [&](const MovementModel& model) {
    return coverage_time_or(
        coverage_trace(g, model, s, dir::east, 0.99, max_steps));
  };
  const int b0 = ct(MovementModel::biased(0.0));
  const int b95 = ct(MovementModel::biased(0.95));
  const int m0 = ct(MovementModel::biased_with_random(0.0, 0.2));
  const int m95 = ct(MovementModel::biased_with_random(0.95, 0.2));
  const bool pass = near(b0, 55, 5.5) && near(b95, 470, 47) &&
                    near(m0, 70, 7) && near(m95, 158, 15.8);
  report(5, pass,
         fmt("5x5 coverage times %d/%d (r=0) and %d/%d (r=0.2) vs "
             "55/470 and 70/158 (+-10%%)",
             b0, b95, m0, m95));
}

// 6. Qualitative shape over the bias grid {0, 0.05, ..., 0.95} with r=0:
//    minimum at bias 0 on both grids, and every sampled bias sits on the
//    correct side of the baseline relative to the cross-over.
void criterion6(const CrossoverResult& c55_r0,
                const CrossoverResult& c1515_r0) {
  std::vector<double> biases;
  for (int i = 0; i < 20; ++i) biases.push_back(i * 0.05);

  bool pass = true;
  const std::vector<std::pair<int, const CrossoverResult*>> grids = {
      {5, &c55_r0}, {15, &c1515_r0}};
  for (const auto& [side, crossover] : grids) {
    const TorusGrid g = TorusGrid::torus8(side, side);
    const auto sweep =
        sweep_bias(g, biases, 0.0, 0.99, default_max_steps(g));
    if (!sweep.baseline || crossover->status != CrossoverStatus::Found) {
      pass = false;
      continue;
    }
    for (std::size_t i = 0; i < sweep.points.size(); ++i) {
      const SweepPoint& point = sweep.points[i];
      if (!point.coverage_time) {
        pass = false;
        continue;
      }
      if (i > 0)
        pass = pass && *point.coverage_time > *sweep.points[0].coverage_time;
      if (point.bias > crossover->bias)
        pass = pass && *point.coverage_time > *sweep.baseline;
      if (point.bias < crossover->bias)
        pass = pass && *point.coverage_time < *sweep.baseline;
    }
  }
  report(6, pass, "sweep minimum at bias 0 and sign split at the cross-over");
}

// 7. Size scaling at p=0.5, r=0: relative improvement over the baseline is
//    below 20% on 5x5 and 40% +- 10 points on 15x15.
void criterion7() {
  const auto improvement = [](int side) {
    const TorusGrid g = TorusGrid::torus8(side, side);
    const int max_steps = default_max_steps(g);
    const NodeId s = g.center_node();
    const int baseline = coverage_time_or(coverage_trace(
        g, MovementModel::uniform(), s, std::nullopt, 0.99, max_steps));
    const int biased = coverage_time_or(coverage_trace(
        g, MovementModel::biased(0.5), s, dir::east, 0.99, max_steps));
    return (baseline - biased) / static_cast<double>(baseline);
  };
  const double small = improvement(5);
  const double large = improvement(15);
  const bool pass = small < 0.20 && near(large, 0.40, 0.10);
  report(7, pass,
         fmt("relative improvement at p=0.5: %.1f%% (5x5, <20%%), %.1f%% "
             "(15x15, 40%%+-10)",
             100 * small, 100 * large));
}

// 8. Model reductions: BiasedWithRandom(p,1) matches Uniform and
//    BiasedWithRandom(p,0) matches Biased(p) stepwise within 1e-9 for
//    p in {0, 0.25, 0.5, 0.75, 1}.
void criterion8() {
  const TorusGrid g = TorusGrid::torus8(5, 5);
  const NodeId s = g.center_node();
  const int max_steps = 2000;
  const auto traces_match = [](const CoverageResult& a,
                               const CoverageResult& b) {
    if (a.coverage_time != b.coverage_time) return false;
    if (a.trace.cumulative.size() != b.trace.cumulative.size()) return false;
    for (std::size_t k = 0; k < a.trace.cumulative.size(); ++k) {
      if (std::abs(a.trace.cumulative[k] - b.trace.cumulative[k]) > 1e-9)
        return false;
      if (std::abs(a.trace.gamma[k] - b.trace.gamma[k]) > 1e-9) return false;
    }
    return true;
  };

  const auto uniform = coverage_trace(g, MovementModel::uniform(), s,
                                      std::nullopt, 0.99, max_steps);
  bool pass = true;
  for (double p : {0.0, 0.25, 0.5, 0.75, 1.0}) {
    const auto r1 = coverage_trace(
        g, MovementModel::biased_with_random(p, 1.0), s, dir::east, 0.99,
        max_steps);
    const auto biased =
        coverage_trace(g, MovementModel::biased(p), s, dir::east, 0.99,
                       max_steps);
    const auto r0 = coverage_trace(
        g, MovementModel::biased_with_random(p, 0.0), s, dir::east, 0.99,
        max_steps);
    pass = pass && traces_match(r1, uniform) && traces_match(r0, biased);
  }
  report(8, pass, "r=1 and r=0 traces reduce to uniform and biased (1e-9)");
}

// 9. Oracle agreement: 10^4 seeded runs on the 5x5 torus keep the empirical
//    return probabilities and distinct-node counts within 4 standard errors
//    of the chain values at every step up to the 99% coverage time.
void criterion9() {
  const TorusGrid g = TorusGrid::torus8(5, 5);
  const NodeId s = g.center_node();
  const int runs = 10000;
  bool pass = true;
  std::string detail;

  const std::vector<std::pair<std::string, MovementModel>> models = {
      {"uniform", MovementModel::uniform()},
      {"biased(0.5)", MovementModel::biased(0.5)},
      {"biased-random(0.5,0.2)", MovementModel::biased_with_random(0.5, 0.2)}};
  for (const auto& [name, model] : models) {
    const bool plain = model.kind == MovementModel::Kind::Uniform;
    const auto macro = coverage_trace(
        g, model, s,
        plain ? std::nullopt : std::optional<Direction>(dir::east), 0.99,
        default_max_steps(g));
    const int horizon = static_cast<int>(macro.trace.gamma.size()) - 1;
    const SimulationConfig config{g,    model,   s, dir::east,
                                  runs, horizon, 20240817};
    const auto empirical = empirical_trace(config, 0.99);
    const auto report_ = validate_trace(macro.trace, empirical, runs, 4.0);
    pass = pass && report_.pass;
    detail += name + (report_.pass ? " ok; " : " FAILED; ");
  }
  report(9, pass, "macro/micro agreement within 4 SE: " + detail);
}

// 10. Degenerate inputs: bias 1 truncates instead of diverging, and a
//     target of at most one node is covered at step 0.
void criterion10() {
  const TorusGrid g = TorusGrid::torus8(5, 5);
  const auto stuck = coverage_trace(g, MovementModel::biased(1.0),
                                    g.center_node(), dir::east, 0.99,
                                    default_max_steps(g));
  bool pass = !stuck.coverage_time.has_value() && stuck.trace.truncated;

  const auto instant = coverage_trace(g, MovementModel::uniform(),
                                      g.center_node(), std::nullopt, 0.04,
                                      default_max_steps(g));
  pass = pass && instant.coverage_time == 0;
  report(10, pass, "bias 1 truncates; target <= 1 node covers at step 0");
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();

  const auto crossover_for = [](int side, double r) {
    const TorusGrid g = TorusGrid::torus8(side, side);
    return crossover_bias(g, r, 0.99, default_max_steps(g));
  };
  const CrossoverResult c55_r0 = crossover_for(5, 0.0);
  const CrossoverResult c1515_r0 = crossover_for(15, 0.0);
  const CrossoverResult c55_r01 = crossover_for(5, 0.1);
  const CrossoverResult c55_r02 = crossover_for(5, 0.2);

  criterion4(c55_r0, c1515_r0, c55_r01, c55_r02);
  criterion5();
  criterion6(c55_r0, c1515_r0);
  criterion7();
  criterion8();
  criterion9();
  criterion10();

  if (g_failures > 0) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
