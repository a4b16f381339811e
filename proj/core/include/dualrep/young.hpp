#pragma once

#include <optional>
#include <string>

#include "dualrep/root_find.hpp"

namespace dualrep {

struct PowerParameters {
  double p = 2.0;
  bool normalized = true;
};

/// Result of the sampled admissibility checks (evenness, P(0) = 0, midpoint
/// convexity, the two limits of P(u)/u, and an odd nondecreasing P').
struct Admissibility {
  bool even = false;
  bool vanishes_at_zero = false;
  bool convex = false;
  bool superlinear_at_zero = false;
  bool superlinear_at_infinity = false;
  bool derivative_monotone = false;
  bool derivative_strictly_increasing = false;
  std::string failure;

  bool admissible() const {
    return even && vanishes_at_zero && convex && superlinear_at_zero && superlinear_at_infinity &&
           derivative_monotone;
  }
};

/// An even convex function P with P(u)/u -> 0 at 0 and -> inf at inf, together
/// with its derivative.  Instances are immutable.
class YoungFunction {
 public:
  /// `derivative_inverse`, when given, must be the exact odd inverse of P'.
  /// Otherwise (P')^{-1} is computed by bisection.
  YoungFunction(std::string label, ScalarFunction value, ScalarFunction derivative,
                ScalarFunction derivative_inverse = {},
                std::optional<PowerParameters> power = std::nullopt);

  double operator()(double u) const { return value_(u); }
  double derivative(double u) const { return derivative_(u); }
  /// The u with P'(u) = s; odd in s.
  double derivative_inverse(double s) const;
  /// The u >= 0 with P(u) = t, for t >= 0.
  double inverse(double t) const;

  const std::string& label() const noexcept { return label_; }
  const std::optional<PowerParameters>& power() const noexcept { return power_; }
  const Admissibility& admissibility() const noexcept { return admissibility_; }
  bool has_closed_form_inverse() const noexcept { return static_cast<bool>(derivative_inverse_); }

 private:
  std::string label_;
  ScalarFunction value_;
  ScalarFunction derivative_;
  ScalarFunction derivative_inverse_;
  std::optional<PowerParameters> power_;
  Admissibility admissibility_;
};

/// P(u) = |u|^p / p (normalized) or |u|^p.
YoungFunction power_young(double p, bool normalized = true);

/// P(u) = |u|^p / p + |u|^r / r.  Not homogeneous, still Delta_2.
YoungFunction power_sum_young(double p, double r);

/// Q(v) = sup_u { u|v| - P(u) } packaged as a Young function, with
/// Q' = (P')^{-1}.
YoungFunction conjugate_young(const YoungFunction& young);

struct ConjugateSolve {
  double value = 0.0;
  double maximizer = 0.0;  // u* >= 0 with P'(u*) = |v|
  int iterations = 0;
};

/// Convex conjugate by bisection on P'(u) = |v|.  Throws kUnboundedConjugate
/// when the bracket cannot be closed.
ConjugateSolve conjugate_solve(const YoungFunction& young, double v);
double conjugate(const YoungFunction& young, double v);

Admissibility check_admissible(const ScalarFunction& value, const ScalarFunction& derivative);

/// Lower estimate of the Delta_2 constant: sup P(2u)/P(u) over a log grid
/// on (0, u_max].
double delta2_constant(const YoungFunction& young, double u_max = 1e6, int grid = 2048);

/// Grid estimate (from above) of the convexity modulus
///   inf [ (P(u)+P(v))/2 - P((u+v)/2) ] / [ (P(u)+P(v))/2 ]
/// over pairs with |u - v| >= eps (|u| + |v|), sampled on the diamond
/// |u| + |v| = 1 times 2^{-(L-1)/2} .. 2^{(L-1)/2}.
double rho_estimate(const YoungFunction& young, double epsilon, int grid = 4096,
                    int scale_levels = 17);

/// RHS - LHS of McShane's inequality
///   P((u-v)/2) <= eps (P(u)+P(v))/2 + [ (P(u)+P(v))/2 - P((u+v)/2) ] / rho.
double mcshane_check(const YoungFunction& young, double epsilon, double rho, double u, double v);

}  // namespace dualrep
