#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "dualrep/duality.hpp"

namespace dualrep {

struct ConvexityModulus {
  double epsilon = 0.0;
  /// 1 - |(x+y)/2| at the witness pair; an upper estimate of delta(eps).
  double delta_estimate = 0.0;
  RealFunction x;
  RealFunction y;
  int samples = 0;
  int refinements = 0;
  std::string estimator = "sampled upper estimate";
};

/// Estimates delta(eps) = inf{1 - |(x+y)/2| : |x| = |y| = 1, |x-y| >= eps}
/// from seeded random unit pairs pushed onto |x - y| = eps and refined by a
/// local random search.  Throws kInfeasible for eps > 2.
ConvexityModulus modulus_estimate(const SpaceModel& model, double epsilon, int samples,
                                  std::uint64_t seed);

/// The unit y on the circle of span{x, direction}, between x and -x, with
/// |x - y| = eps.  x must be a unit vector; throws kDomain when direction is
/// parallel to x.
RealFunction boundary_partner(const SpaceModel& model, const RealFunction& x,
                              const RealFunction& direction, double epsilon);

struct SequenceDiagnostics {
  RealFunction maximizer;
  std::vector<RealFunction> points;
  /// 1 - pairing(y_hat, x_n)
  std::vector<double> gaps;
  std::vector<double> distances_to_maximizer;
  /// sup_{m,k >= n} |x_m - x_k|
  std::vector<double> tail_diameters;
  /// min over pairs of |(x_n + x_m)/2| - pairing(y_hat, (x_n + x_m)/2); must be >= 0.
  double midpoint_margin = 0.0;
};

/// Builds unit x_n with pairing(y_hat, x_n) >= 1 - 1/n; the gap target is
/// 2^{-n}.  Odd steps perturb M(y) along the kernel of y_hat, even steps are
/// rejection-sampled near M(y).  Once the target drops below 1e-12 the step
/// along a direction is scaled from its 1e-12 root by the quadratic gap law.
SequenceDiagnostics maximizing_sequence_experiment(const SpaceModel& model, const DualFunctional& y,
                                                   int steps, std::uint64_t seed);

struct ContinuityRow {
  double size = 0.0;
  double max_displacement = 0.0;
  double mean_displacement = 0.0;
  int samples = 0;
};

/// |M(y + dy) - M(y)| for dual perturbations with |dy|_* = size.
std::vector<ContinuityRow> m_continuity_probe(const SpaceModel& model, const DualFunctional& y,
                                              std::span<const double> sizes, std::uint64_t seed,
                                              int samples_per_size = 8);

}  // namespace dualrep
