#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dualrep/measure_space.hpp"
#include "dualrep/norms.hpp"

namespace dualrep {

namespace detail {
struct BidualTag {};
}  // namespace detail

/// Element of X'' written as coefficients acting on y in X' by
/// Phi(y) = sum_i Phi_i y_i mu_i.
using BidualElement = AtomVector<detail::BidualTag>;

double bidual_action(const MeasureSpace& space, const BidualElement& phi, const DualFunctional& y);

struct DualityResult {
  /// M(y): the unit vector at which the normalized functional attains its norm.
  RealFunction point;
  /// N'(point), which should reproduce the normalized functional.
  DualFunctional functional;
  /// Scalar of the stationarity system P'(h) = multiplier * y_hat.
  double multiplier = 0.0;
  /// dual_norm(functional - y_hat)
  double residual = 0.0;
  /// pairing(y_hat, point); equals 1 on success.
  double action = 0.0;
  /// dual_norm(y): the factor removed by normalization.
  double scale = 0.0;
};

/// Derivative of the norm at x != 0 (homogeneous of degree zero):
///   Hilbert:     x / |x|
///   Lebesgue(p): |x_hat|^{p-1} sgn x_hat,            x_hat = x / |x|_p
///   Orlicz(P):   P'(h) / sum_j P'(h_j) h_j mu_j,     h = x / |x|_Lux
/// Throws kGradientUndefined for x = 0.
DualFunctional norm_gradient(const SpaceModel& model, const RealFunction& x);

/// Point part of the duality map, without the round-trip diagnostics.  When
/// `scale` is non-null it receives dual_norm(y).
RealFunction duality_point(const SpaceModel& model, const DualFunctional& y,
                           double* scale = nullptr, double* multiplier = nullptr);

/// The duality map M.  y is normalized to unit dual norm first; the point is
/// recovered from the stationarity system of  min sum P(h) mu  on the
/// hyperplane {h : pairing(y_hat, h) = 1}.  Throws kUndefinedDirection for y = 0.
DualityResult duality_map(const SpaceModel& model, const DualFunctional& y);

struct RieszRepresentation {
  DualFunctional density;
  /// Largest |pairing(density, f) - pairing(y, f)| / |f| over the probes.
  double max_defect = 0.0;
  int probes = 0;
};

/// Density g with pairing(g, .) = y, built as |y|_* N'(M(y)), then checked on
/// `probes` seeded random functions.
RieszRepresentation riesz_represent(const SpaceModel& model, const DualFunctional& y,
                                    std::uint64_t probe_seed = 0, int probes = 100);

/// F(h) = |h|^{p/q} sgn h = |h|^{p-1} sgn h, a homeomorphism l^p -> l^q.
RealFunction mazur_map(double p, const RealFunction& h);
/// F^{-1}(g) = |g|^{q/p} sgn g
RealFunction mazur_inverse(double p, const RealFunction& g);

struct ReflexivityWitness {
  /// x in X with Phi(y) = pairing(y, x) for every y.
  RealFunction witness;
  /// The unit functional with Phi(support) = |Phi|.
  DualFunctional support;
  /// |Phi| in X''.
  double scale = 0.0;
};

/// Two nested duality maps: first inside the dual model to find the unit y
/// with Phi(y) = |Phi|, then M(y) in X, rescaled by |Phi|.  Only Hilbert and
/// Lebesgue models are supported.
ReflexivityWitness reflexivity_witness(const SpaceModel& model, const BidualElement& phi);

struct GateauxProfile {
  std::vector<double> steps;
  /// |N(x+tu) - N(x) - t N'(x)u|
  std::vector<double> residuals;
  /// residual / |t|, zero at t = 0
  std::vector<double> ratios;
};

GateauxProfile gateaux_fd_check(const SpaceModel& model, const RealFunction& x,
                                const RealFunction& u, std::span<const double> steps);

}  // namespace dualrep
