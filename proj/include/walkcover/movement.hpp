#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "walkcover/grid.hpp"

namespace walkcover {

// Heading-selection model for a single step.
//
// Uniform picks any direction with probability 1/degree, independent of the
// current heading. Biased keeps the current heading with probability p and
// turns one direction step left or right with probability (1-p)/2 each.
// BiasedWithRandom substitutes a uniform choice with probability r and
// otherwise behaves like Biased; it is defined for torus8 grids only.
struct MovementModel {
  enum class Kind { Uniform, Biased, BiasedWithRandom };

  Kind kind = Kind::Uniform;
  double p = 0.0;
  double r = 0.0;

  static MovementModel uniform() { return {Kind::Uniform, 0.0, 0.0}; }

  static MovementModel biased(double p) {
    check_probability(p, "bias p");
    return {Kind::Biased, p, 0.0};
  }

  static MovementModel biased_with_random(double p, double r) {
    check_probability(p, "bias p");
    check_probability(r, "random-step probability r");
    return {Kind::BiasedWithRandom, p, r};
  }

  static void check_probability(double value, const std::string& name) {
    if (!(value >= 0.0 && value <= 1.0))
      throw std::domain_error(name + " must lie in [0, 1]");
  }

  friend bool operator==(const MovementModel&, const MovementModel&) = default;
};

// Probability of each next heading given the current one. Returns one entry
// per direction; the entries are nonnegative and sum to 1.
//
// On a ring the two turn directions coincide, so the opposite heading
// collects the full 1-p.
inline std::vector<double> heading_distribution(const MovementModel& model,
                                                const TorusGrid& grid,
                                                Direction current) {
  if (!grid.valid_direction(current))
    throw std::domain_error("heading_distribution: invalid current direction");
  MovementModel::check_probability(model.p, "bias p");
  MovementModel::check_probability(model.r, "random-step probability r");

  const int n = grid.degree();
  std::vector<double> q(static_cast<std::size_t>(n), 0.0);

  switch (model.kind) {
    case MovementModel::Kind::Uniform:
      for (double& x : q) x = 1.0 / n;
      break;
    case MovementModel::Kind::Biased:
      q[static_cast<std::size_t>(current.index)] += model.p;
      q[static_cast<std::size_t>(grid.turned(current, +1).index)] +=
          (1.0 - model.p) / 2.0;
      q[static_cast<std::size_t>(grid.turned(current, -1).index)] +=
          (1.0 - model.p) / 2.0;
      break;
    case MovementModel::Kind::BiasedWithRandom:
      if (grid.kind() == Topology::Ring)
        throw std::domain_error(
            "random-step model is defined only for torus8 grids");
      for (double& x : q) x = model.r / n;
      q[static_cast<std::size_t>(current.index)] += (1.0 - model.r) * model.p;
      q[static_cast<std::size_t>(grid.turned(current, +1).index)] +=
          (1.0 - model.r) * (1.0 - model.p) / 2.0;
      q[static_cast<std::size_t>(grid.turned(current, -1).index)] +=
          (1.0 - model.r) * (1.0 - model.p) / 2.0;
      break;
  }
  return q;
}

}  // namespace walkcover
