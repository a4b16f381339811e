#pragma once

#include <cstdint>
#include <vector>

#include "dualrep/duality.hpp"

namespace dualrep {

/// A subspace X1 of X spanned by linearly independent functions.
class Subspace {
 public:
  /// Throws kIllConditioned when the Gram determinant of the normalized basis
  /// is below `gram_threshold`.
  Subspace(const MeasureSpace& space, std::vector<RealFunction> basis,
           double gram_threshold = 1e-10);

  std::size_t size() const noexcept { return basis_.size(); }
  std::size_t ambient_dimension() const noexcept { return ambient_dimension_; }
  const std::vector<RealFunction>& basis() const noexcept { return basis_; }
  const RealFunction& operator[](std::size_t j) const { return basis_[j]; }
  double gram_determinant() const noexcept { return gram_determinant_; }

  /// sum_j c_j basis_j
  RealFunction combine(std::span<const double> coefficients) const;

 private:
  std::vector<RealFunction> basis_;
  std::size_t ambient_dimension_ = 0;
  double gram_determinant_ = 0.0;
};

/// Values of a functional on the basis vectors of a subspace.
struct SubFunctional {
  std::vector<double> action;
};

SubFunctional restrict(const SpaceModel& model, const Subspace& sub, const DualFunctional& y);

struct ExtensionOptions {
  int restarts = 8;
  std::uint64_t seed = 0;
  double gradient_tolerance = 1e-13;
  int max_iterations = 2000;
};

struct Extension {
  /// The norm-preserving extension y in X'.
  DualFunctional functional;
  /// x1 in S cap X1 with y1(x1) = |y1|.
  RealFunction maximizer;
  std::vector<double> maximizer_coefficients;
  double subspace_norm = 0.0;
  double dual_norm = 0.0;
  /// max_j |restrict(y)_j - action_j|
  double restriction_defect = 0.0;
  double gradient_norm = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// Unique norm-preserving extension of y1 from X1 to X.  The maximizer of y1
/// on the unit sphere of X1 is found by minimizing N^2 over the affine set
/// {c : y1(sum c_j b_j) = 1} in basis coordinates; the extension is
/// |y1| N'(x1).
Extension extend_functional(const SpaceModel& model, const Subspace& sub, const SubFunctional& y1,
                            const ExtensionOptions& options = {});

/// Orthonormal (Euclidean, in coefficient space) basis of the functionals
/// that vanish on every basis vector of `sub`.
std::vector<DualFunctional> annihilator(const MeasureSpace& space, const Subspace& sub);

struct UniquenessReport {
  double extension_dual_norm = 0.0;
  /// Smallest dual norm found over the affine family y + annihilator.
  double best_dual_norm = 0.0;
  /// dual_norm(best - y)
  double best_distance = 0.0;
  /// Largest dual_norm(candidate - y) over all optimized candidates.
  double max_distance = 0.0;
  std::size_t annihilator_dimension = 0;
  int trials = 0;
  /// Optimizer iterations summed over trials.
  int iterations = 0;
};

/// Searches the extension family for a competitor to y of no larger dual
/// norm, by minimizing the dual norm from `trials` seeded starting points.
UniquenessReport uniqueness_probe(const SpaceModel& model, const Subspace& sub,
                                  const SubFunctional& y1, const DualFunctional& y, int trials,
                                  std::uint64_t seed);

}  // namespace dualrep
