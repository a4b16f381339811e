#pragma once

#include <functional>
#include <span>
#include <vector>

namespace dualrep {

/// Writes the gradient into `gradient` and returns the value.
using Objective = std::function<double(std::span<const double> x, std::span<double> gradient)>;

struct MinimizeOptions {
  /// Converged when ||grad|| <= gradient_tolerance * max(1, |value|).
  double gradient_tolerance = 1e-12;
  int max_iterations = 1000;
  int max_backtracks = 60;
  double armijo = 1e-4;
};

struct MinimizeResult {
  std::vector<double> x;
  double value = 0.0;
  double gradient_norm = 0.0;
  int iterations = 0;
  int evaluations = 0;
  bool converged = false;
};

/// Quasi-Newton (BFGS) descent with Armijo backtracking.  Once function
/// differences fall below rounding noise, steps that shrink the gradient are
/// accepted instead.
MinimizeResult minimize_bfgs(const Objective& objective, std::vector<double> x0,
                             const MinimizeOptions& options = {});

}  // namespace dualrep
