#include "dualrep/root_find.hpp"

#include <cmath>
#include <string>

namespace dualrep {
namespace {

// Bisection on [lower, upper], where below(lower) is true and below(upper) is false.
template <class Below>
RootResult bisect(Below below, double lower, double upper, int iterations,
                  const RootOptions& options) {
  while (iterations < options.max_iterations) {
    if (upper - lower <= options.relative_width * upper) break;
    const double mid = 0.5 * (lower + upper);
    if (mid <= lower || mid >= upper) break;
    if (below(mid)) {
      lower = mid;
    } else {
      upper = mid;
    }
    ++iterations;
  }
  return {0.5 * (lower + upper), lower, upper, iterations};
}

}  // namespace

RootResult invert_increasing(const ScalarFunction& fn, double target, const RootOptions& options) {
  if (!(target > fn(0.0))) return {0.0, 0.0, 0.0, 0};
  double upper = 1.0;
  int iterations = 0;
  while (!(fn(upper) >= target)) {
    upper *= 2.0;
    ++iterations;
    if (upper > options.overflow_bound || iterations > options.max_iterations) {
      raise(options.failure_kind,
            "bracket expansion exceeded " + std::to_string(options.overflow_bound));
    }
  }
  return bisect([&](double u) { return fn(u) < target; }, 0.0, upper, iterations, options);
}

RootResult solve_monotone(const ScalarFunction& fn, double target, double guess,
                          Monotonicity direction, const RootOptions& options) {
  if (!(guess > 0.0) || !std::isfinite(guess)) guess = 1.0;
  // below(k): the root lies to the right of k.
  const auto below = [&](double k) {
    const double value = fn(k);
    return direction == Monotonicity::kIncreasing ? value < target : value > target;
  };
  double lower = guess;
  double upper = guess;
  int iterations = 0;
  if (below(guess)) {
    do {
      lower = upper;
      upper *= 2.0;
      if (upper > options.overflow_bound || ++iterations > options.max_iterations) {
        raise(options.failure_kind, "upper bracket diverged");
      }
    } while (below(upper));
  } else {
    do {
      upper = lower;
      lower *= 0.5;
      if (lower < options.underflow_bound || ++iterations > options.max_iterations) {
        raise(options.failure_kind, "lower bracket collapsed");
      }
    } while (!below(lower));
  }
  return bisect(below, lower, upper, iterations, options);
}

}  // namespace dualrep
