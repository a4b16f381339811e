#pragma once

#include <functional>

#include "dualrep/errors.hpp"

namespace dualrep {

using ScalarFunction = std::function<double(double)>;

struct RootOptions {
  /// Stop once (upper - lower) <= relative_width * upper.  Zero means run
  /// until the bracket can no longer be split in floating point.
  double relative_width = 1e-13;
  double overflow_bound = 1e300;
  double underflow_bound = 1e-300;
  int max_iterations = 4000;
  ErrorKind failure_kind = ErrorKind::kSolverDivergence;
};

struct RootResult {
  double root = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  int iterations = 0;
};

/// Solve fn(u) = target for u >= 0 where fn is nondecreasing on [0, inf) and
/// fn(0) <= target.  Bracket starts at [0, 1] and the upper end doubles until
/// fn(upper) >= target.
RootResult invert_increasing(const ScalarFunction& fn, double target,
                             const RootOptions& options = {});

enum class Monotonicity { kIncreasing, kDecreasing };

/// Solve fn(k) = target on (0, inf) for a strictly monotone fn, starting
/// from a positive guess and doubling/halving until the target is straddled.
RootResult solve_monotone(const ScalarFunction& fn, double target, double guess,
                          Monotonicity direction, const RootOptions& options = {});

}  // namespace dualrep
