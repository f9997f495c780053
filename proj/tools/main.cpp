// Command-line front end: coverage runs, bias/size sweeps, cross-over
// search, and Monte-Carlo validation of the chain model, with CSV and SVG
// output. Exit codes: 0 success, 1 usage error, 2 truncated or ambiguous
// result, 3 validation failure.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "walkcover/coverage.hpp"
#include "walkcover/csv.hpp"
#include "walkcover/oracle.hpp"
#include "walkcover/svg_chart.hpp"

namespace {

using namespace walkcover;

struct RunSpec {
  std::string topology = "torus8";
  int rows = 0;  // 0 = auto: 5 for torus8, 1 for ring
  int cols = 5;
  std::string model = "uniform";
  double p = 0.5;
  double r = 0.0;
  int start = -1;  // -1 = centre node
  int d0 = 0;      // east
  double target = 99.0;  // percent
  int max_steps = 0;     // 0 = auto
  double bias_start = 0.0;
  double bias_stop = 0.95;
  double bias_step = 0.05;
  double tolerance = 0.005;
  int min_size = 5;
  int max_size = 15;
  int size_step = 1;
  int runs = 10000;
  std::uint64_t seed = 1;
  std::string csv_path;
  std::string svg_path;
};

TorusGrid make_grid(const RunSpec& spec) {
  if (spec.topology == "ring") {
    if (spec.rows > 1)
      throw std::domain_error("ring topology has a single row");
    return TorusGrid::ring(spec.cols);
  }
  return TorusGrid::torus8(spec.rows == 0 ? 5 : spec.rows, spec.cols);
}

MovementModel make_model(const RunSpec& spec) {
  if (spec.model == "uniform") return MovementModel::uniform();
  if (spec.model == "biased") return MovementModel::biased(spec.p);
  return MovementModel::biased_with_random(spec.p, spec.r);
}

double target_fraction(const RunSpec& spec) {
  if (!(spec.target > 0.0 && spec.target <= 100.0))
    throw std::domain_error("--target must lie in (0, 100]");
  return spec.target / 100.0;
}

int resolve_max_steps(const RunSpec& spec, const TorusGrid& grid) {
  return spec.max_steps > 0 ? spec.max_steps : default_max_steps(grid);
}

NodeId resolve_start(const RunSpec& spec, const TorusGrid& grid) {
  return spec.start < 0 ? grid.center_node() : spec.start;
}

std::vector<double> bias_range(const RunSpec& spec) {
  if (spec.bias_step <= 0.0)
    throw std::domain_error("--bias-step must be positive");
  if (spec.bias_stop < spec.bias_start)
    throw std::domain_error("--bias-stop must be >= --bias-start");
  std::vector<double> biases;
  const int count = static_cast<int>(
      (spec.bias_stop - spec.bias_start) / spec.bias_step + 1e-9);
  for (int i = 0; i <= count; ++i)
    biases.push_back(spec.bias_start + i * spec.bias_step);
  return biases;
}

void write_file(const std::string& path, const std::string& content) {
  if (path.empty()) return;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

std::string grid_tag(const TorusGrid& grid) {
  if (grid.kind() == Topology::Ring)
    return "ring of " + std::to_string(grid.cols());
  return std::to_string(grid.rows()) + "x" + std::to_string(grid.cols()) +
         " torus";
}

int cmd_coverage(const RunSpec& spec) {
  const TorusGrid grid = make_grid(spec);
  const MovementModel model = make_model(spec);
  const std::optional<Direction> d0 =
      model.kind == MovementModel::Kind::Uniform
          ? std::nullopt
          : std::optional<Direction>(Direction{spec.d0});
  const CoverageResult result =
      coverage_trace(grid, model, resolve_start(spec, grid), d0,
                     target_fraction(spec), resolve_max_steps(spec, grid));
  write_file(spec.csv_path, coverage_csv(result));
  if (!result.coverage_time) {
    std::printf("truncated\n");
    return 2;
  }
  std::printf("coverage_time=%d\n", *result.coverage_time);
  return 0;
}

int cmd_sweep_bias(const RunSpec& spec) {
  const TorusGrid grid = make_grid(spec);
  const SweepResult sweep =
      sweep_bias(grid, bias_range(spec), spec.r, target_fraction(spec),
                 resolve_max_steps(spec, grid));
  write_file(spec.csv_path, sweep_csv(sweep));
  char title[160];
  std::snprintf(title, sizeof title,
                "Coverage time vs bias (%s, r=%g, target %g%%)",
                grid_tag(grid).c_str(), spec.r, spec.target);
  write_file(spec.svg_path, sweep_chart(sweep, title));
  if (!sweep.baseline) {
    std::printf("truncated\n");
    return 2;
  }
  std::printf("baseline=%d\n", *sweep.baseline);
  return 0;
}

int cmd_crossover(const RunSpec& spec) {
  const TorusGrid grid = make_grid(spec);
  const CrossoverResult result =
      crossover_bias(grid, spec.r, target_fraction(spec),
                     resolve_max_steps(spec, grid), spec.tolerance);
  write_file(spec.csv_path, crossover_csv(result));
  switch (result.status) {
    case CrossoverStatus::Found:
      std::printf("crossover=%s\n", format_double(result.bias).c_str());
      return 0;
    case CrossoverStatus::Ambiguous:
      std::printf("ambiguous cross-over in final bracket\n");
      return 2;
    case CrossoverStatus::NoCrossover:
      break;
  }
  std::printf("no cross-over in range\n");
  return 2;
}

int cmd_sweep_size(const RunSpec& spec) {
  const std::vector<SizeSweepEntry> entries =
      sweep_size(spec.min_size, spec.max_size, spec.size_step, spec.r,
                 target_fraction(spec), spec.max_steps);
  write_file(spec.csv_path, size_sweep_csv(entries));
  char title[160];
  std::snprintf(title, sizeof title,
                "Cross-over bias vs network size (r=%g, target %g%%)", spec.r,
                spec.target);
  write_file(spec.svg_path, size_sweep_chart(entries, title));
  bool all_found = true;
  for (const SizeSweepEntry& entry : entries) {
    if (entry.crossover.status == CrossoverStatus::Found) {
      std::printf("size=%d crossover=%s\n", entry.size,
                  format_double(entry.crossover.bias).c_str());
    } else {
      std::printf("size=%d crossover=none\n", entry.size);
      all_found = false;
    }
  }
  return all_found ? 0 : 2;
}

int cmd_validate(const RunSpec& spec) {
  if (spec.runs < 100)
    throw std::domain_error("--runs must be >= 100 for validation");
  const TorusGrid grid = make_grid(spec);
  const MovementModel model = make_model(spec);
  const NodeId start = resolve_start(spec, grid);
  const std::optional<Direction> d0 =
      model.kind == MovementModel::Kind::Uniform
          ? std::nullopt
          : std::optional<Direction>(Direction{spec.d0});
  const CoverageResult macro =
      coverage_trace(grid, model, start, d0, target_fraction(spec),
                     resolve_max_steps(spec, grid));

  SimulationConfig config{grid,
                          model,
                          start,
                          Direction{spec.d0},
                          spec.runs,
                          static_cast<int>(macro.trace.gamma.size()) - 1,
                          spec.seed};
  if (config.max_steps < 1) config.max_steps = 1;
  const EmpiricalTrace empirical =
      empirical_trace(config, target_fraction(spec));
  const ValidationReport report =
      validate_trace(macro.trace, empirical, spec.runs);
  write_file(spec.csv_path, validation_csv(report));
  std::printf("validation=%s\n", report.pass ? "pass" : "fail");
  return report.pass ? 0 : 3;
}

void add_grid_options(CLI::App* cmd, RunSpec& spec) {
  cmd->add_option("--topology", spec.topology, "grid topology")
      ->check(CLI::IsMember({"ring", "torus8"}));
  cmd->add_option("--rows", spec.rows, "grid rows (torus8)");
  cmd->add_option("--cols", spec.cols, "grid columns (ring: node count)");
  cmd->add_option("--target", spec.target, "coverage target in percent");
  cmd->add_option("--max-steps", spec.max_steps,
                  "step cap (0 = 200 * nodes * degree)");
}

void add_model_options(CLI::App* cmd, RunSpec& spec) {
  cmd->add_option("--model", spec.model, "movement model")
      ->check(CLI::IsMember({"uniform", "biased", "biased-random"}));
  cmd->add_option("--p", spec.p, "bias: probability of keeping the heading");
  cmd->add_option("--r", spec.r, "probability of a uniform random step");
  cmd->add_option("--start", spec.start, "start node (-1 = centre)");
  cmd->add_option("--d0", spec.d0, "initial direction index");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "walkcover: coverage times of random and directionally biased walks "
      "on toroidal grids"};
  app.require_subcommand(1);
  RunSpec spec;

  CLI::App* coverage =
      app.add_subcommand("coverage", "expected coverage trace of one walk");
  add_grid_options(coverage, spec);
  add_model_options(coverage, spec);
  coverage->add_option("--csv", spec.csv_path, "per-step trace CSV path");

  CLI::App* sweep = app.add_subcommand(
      "sweep-bias", "coverage time across a range of bias values");
  add_grid_options(sweep, spec);
  sweep->add_option("--r", spec.r, "probability of a uniform random step");
  sweep->add_option("--bias-start", spec.bias_start, "first bias value");
  sweep->add_option("--bias-stop", spec.bias_stop, "last bias value");
  sweep->add_option("--bias-step", spec.bias_step, "bias increment");
  sweep->add_option("--csv", spec.csv_path, "sweep CSV path");
  sweep->add_option("--svg", spec.svg_path, "sweep chart SVG path");

  CLI::App* crossover = app.add_subcommand(
      "crossover",
      "bias at which the biased walk stops beating the random walk");
  add_grid_options(crossover, spec);
  crossover->add_option("--r", spec.r,
                        "probability of a uniform random step");
  crossover->add_option("--tolerance", spec.tolerance,
                        "bisection bracket width in bias units");
  crossover->add_option("--csv", spec.csv_path, "bisection iterates CSV path");

  CLI::App* sweep_size_cmd = app.add_subcommand(
      "sweep-size", "cross-over bias across square torus sizes");
  sweep_size_cmd->add_option("--min-size", spec.min_size, "smallest grid side");
  sweep_size_cmd->add_option("--max-size", spec.max_size, "largest grid side");
  sweep_size_cmd->add_option("--size-step", spec.size_step, "side increment");
  sweep_size_cmd->add_option("--r", spec.r,
                             "probability of a uniform random step");
  sweep_size_cmd->add_option("--target", spec.target,
                             "coverage target in percent");
  sweep_size_cmd->add_option("--max-steps", spec.max_steps,
                             "step cap (0 = per-grid default)");
  sweep_size_cmd->add_option("--csv", spec.csv_path, "results CSV path");
  sweep_size_cmd->add_option("--svg", spec.svg_path, "chart SVG path");

  CLI::App* validate = app.add_subcommand(
      "validate", "check the chain model against a Monte-Carlo simulation");
  add_grid_options(validate, spec);
  add_model_options(validate, spec);
  validate->add_option("--runs", spec.runs, "number of simulation runs");
  validate->add_option("--seed", spec.seed, "RNG seed");
  validate->add_option("--csv", spec.csv_path, "comparison CSV path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  // Per-subcommand default output paths when none was given.
  if (coverage->parsed() && coverage->count("--csv") == 0)
    spec.csv_path = "coverage.csv";
  if (sweep->parsed()) {
    if (sweep->count("--csv") == 0) spec.csv_path = "sweep_bias.csv";
    if (sweep->count("--svg") == 0) spec.svg_path = "sweep_bias.svg";
  }
  if (crossover->parsed() && crossover->count("--csv") == 0)
    spec.csv_path = "crossover.csv";
  if (sweep_size_cmd->parsed()) {
    if (sweep_size_cmd->count("--csv") == 0) spec.csv_path = "sweep_size.csv";
    if (sweep_size_cmd->count("--svg") == 0) spec.svg_path = "sweep_size.svg";
  }
  if (validate->parsed() && validate->count("--csv") == 0)
    spec.csv_path = "validate.csv";

  try {
    if (coverage->parsed()) return cmd_coverage(spec);
    if (sweep->parsed()) return cmd_sweep_bias(spec);
    if (crossover->parsed()) return cmd_crossover(spec);
    if (sweep_size_cmd->parsed()) return cmd_sweep_size(spec);
    if (validate->parsed()) return cmd_validate(spec);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 1;
}
