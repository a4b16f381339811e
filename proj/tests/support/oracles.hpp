#pragma once

// Brute-force reference solvers.  They share no algorithm with the library
// beyond norm evaluation, and are meant for small n only.

#include "dualrep/norms.hpp"

namespace dualrep::oracle {

struct HyperplaneMinimum {
  /// h / N(h) for the minimizing h; equals M(y / |y|_*).
  RealFunction point;
  /// min N(h) over the hyperplane, i.e. 1 / |y|_*.
  double min_norm = 0.0;
  int iterations = 0;
};

/// Minimizes N(h)^2 over {pairing(y, h) = 1} by projected gradient descent
/// (Barzilai-Borwein steps, Armijo safeguard) with a central finite-difference
/// gradient.
HyperplaneMinimum hyperplane_minimizer(const SpaceModel& model, const DualFunctional& y);

/// Maximizes sum f g mu over {sum P(f) mu <= 1} by projected ascent with the
/// Euclidean projection onto the P-ball.  Returns the attained value.
double orlicz_norm_ascent(const SpaceModel& model, const DualFunctional& g);

/// Euclidean projection of z onto {f : sum P(f_i) mu_i <= 1}.
RealFunction project_onto_modular_ball(const SpaceModel& model, const RealFunction& z);

/// delta(eps) of a two-atom model by an angular scan of the unit circle.
/// For each x(phi) the partners at distance eps on both sides are located by
/// bisection along the circle, and the smallest depth is refined by golden
/// section.
double modulus_2d(const SpaceModel& model, double epsilon, int angles = 4096);

/// inf of [(P(u)+P(v))/2 - P((u+v)/2)] / [(P(u)+P(v))/2] over the boundary
/// |u - v| = eps (|u| + |v|) and the opposite-sign arc, for a positively
/// homogeneous P (one scale suffices).
double rho_boundary(const YoungFunction& young, double epsilon, int points = 200000);

/// Operator norm sup{pairing(g, f) : N(f) = 1}, as the reciprocal of the
/// hyperplane minimum.
double operator_norm(const SpaceModel& model, const DualFunctional& g);

}  // namespace dualrep::oracle
