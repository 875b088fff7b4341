#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "onetri/geometry.hpp"

namespace onetri {

/// Random-restart descent settings for the one-triangle defect.
struct SearchConfig {
  std::size_t n = 5;
  std::size_t dim = 3;
  std::size_t restarts = 64;
  std::size_t max_iters = 20000;
  std::uint64_t seed = 20190101;
  double initial_step = 0.05;
  double shrink = 0.5;
  double grow = 2.0;
  /// Minimum 16 Area^2 / s^2 for a triple to count as a triangle.
  double degeneracy_margin = 1e-2;
  double gradient_tolerance = 1e-15;
  double step_tolerance = 1e-20;
  /// Descent stops once the defect falls below this floor.
  double defect_floor = 1e-28;

  void validate() const;
};

struct RestartOutcome {
  std::uint64_t seed;
  double final_defect;
  std::size_t iterations;
};

struct DefectResult {
  double best_defect = 0.0;
  Coordinates best_config;
  std::vector<RestartOutcome> per_restart;
  std::size_t iterations_used = 0;
};

/// Scale-invariant one-triangle defect. With s the mean squared pairwise
/// distance, every triple with 16A^2/s^2 above `margin` contributes its sorted
/// squared sides divided by s; the defect is the mean squared deviation of those
/// vectors from their mean plus (margin - 16A^2/s^2)^2 for every other triple.
/// Throws PreconditionError when no triple clears the margin.
double triangle_defect(const Coordinates& points, double margin);

/// Analytic gradient (n x d). Throws NonDifferentiable at a side tie whose
/// one-sided gradients disagree, or on the margin boundary.
Coordinates defect_gradient(const Coordinates& points, double margin);

/// Deterministic in `cfg`: restart i draws from a generator seeded with seed + i.
DefectResult minimize_defect(const SearchConfig& cfg);

struct SnapResult {
  ApproxCensusReport census;
  double defect;
};

SnapResult snap_and_census(const Coordinates& points, double eps, double margin);

}  // namespace onetri
