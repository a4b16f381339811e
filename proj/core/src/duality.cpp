#include "dualrep/duality.hpp"

#include <cmath>

#include "dualrep/errors.hpp"
#include "dualrep/root_find.hpp"
#include "dualrep/sampling.hpp"

namespace dualrep {
namespace {

double sign(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }

RealFunction signed_power(const RealFunction& h, double exponent) {
  RealFunction out = RealFunction::zeros(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) out[i] = std::pow(std::abs(h[i]), exponent) * sign(h[i]);
  return out;
}

void check_exponent(double p) {
  if (!(p > 1.0) || !std::isfinite(p)) raise(ErrorKind::kDomain, "exponent must satisfy 1 < p < inf");
}

}  // namespace

double bidual_action(const MeasureSpace& space, const BidualElement& phi, const DualFunctional& y) {
  check_dimension(space, phi.size(), "second-dual element");
  check_dimension(space, y.size(), "functional");
  return weighted_dot(phi.values(), y.values(), space.weights());
}

DualFunctional norm_gradient(const SpaceModel& model, const RealFunction& x) {
  check_dimension(model.space(), x.size(), "function");
  if (x.is_zero()) raise(ErrorKind::kGradientUndefined, "norm is not differentiable at 0");

  const double n = norm(model, x);
  const RealFunction unit = (1.0 / n) * x;
  if (model.is_hilbert()) return as_functional(unit);
  if (model.is_lebesgue()) return as_functional(signed_power(unit, model.exponent() - 1.0));

  const YoungFunction& young = model.young();
  DualFunctional g = DualFunctional::zeros(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) g[i] = young.derivative(unit[i]);
  const double normalizer = pairing(model.space(), g, unit);
  return (1.0 / normalizer) * g;
}

RealFunction duality_point(const SpaceModel& model, const DualFunctional& y, double* scale,
                           double* multiplier) {
  check_dimension(model.space(), y.size(), "functional");
  if (y.is_zero()) raise(ErrorKind::kUndefinedDirection, "duality map needs y != 0");

  if (model.is_orlicz()) {
    // The Orlicz-norm maximizer already solves P'(h) = y / lambda on the unit
    // sphere (modular 1), which is the stationarity system for y_hat.
    OrliczSolve solve = orlicz_solve(model, y);
    if (scale) *scale = solve.norm;
    if (multiplier) *multiplier = solve.norm / solve.multiplier;
    RealFunction point = std::move(solve.maximizer);
    point *= 1.0 / norm(model, point);
    return point;
  }

  const double dn = dual_norm(model, y);
  if (scale) *scale = dn;
  const DualFunctional unit = (1.0 / dn) * y;

  RealFunction point;
  double lambda = 1.0;
  if (model.is_hilbert()) {
    point = as_function(unit);
  } else {
    // With P = |u|^p the stationarity system h = (P')^{-1}(lambda y_hat)
    // is solved by lambda = p for any unit y_hat.
    const double p = model.exponent();
    lambda = p;
    point = signed_power(as_function(unit), conjugate_exponent(p) - 1.0);
  }
  if (multiplier) *multiplier = lambda;
  point *= 1.0 / norm(model, point);
  return point;
}

DualityResult duality_map(const SpaceModel& model, const DualFunctional& y) {
  DualityResult out;
  out.point = duality_point(model, y, &out.scale, &out.multiplier);
  const DualFunctional unit = (1.0 / out.scale) * y;
  out.functional = norm_gradient(model, out.point);
  out.action = pairing(model.space(), unit, out.point);
  out.residual = dual_norm(model, out.functional - unit);
  return out;
}

RieszRepresentation riesz_represent(const SpaceModel& model, const DualFunctional& y,
                                    std::uint64_t probe_seed, int probes) {
  const DualityResult m = duality_map(model, y);
  RieszRepresentation out;
  out.density = m.scale * norm_gradient(model, m.point);
  Rng rng = make_rng(probe_seed);
  for (int k = 0; k < probes; ++k) {
    const RealFunction f = random_function(rng, model.dimension());
    const double n = norm(model, f);
    if (n == 0.0) continue;
    const double defect =
        std::abs(pairing(model.space(), out.density, f) - pairing(model.space(), y, f)) / n;
    out.max_defect = std::max(out.max_defect, defect);
    ++out.probes;
  }
  return out;
}

RealFunction mazur_map(double p, const RealFunction& h) {
  check_exponent(p);
  return signed_power(h, p - 1.0);
}

RealFunction mazur_inverse(double p, const RealFunction& g) {
  check_exponent(p);
  return signed_power(g, 1.0 / (p - 1.0));
}

ReflexivityWitness reflexivity_witness(const SpaceModel& model, const BidualElement& phi) {
  check_dimension(model.space(), phi.size(), "second-dual element");
  if (model.is_orlicz()) {
    raise(ErrorKind::kUnsupportedModel, "reflexivity witness needs a Hilbert or Lebesgue model");
  }
  if (phi.is_zero()) raise(ErrorKind::kUndefinedDirection, "reflexivity witness needs Phi != 0");

  // Inside the dual model, Phi is a functional and its duality point is a
  // unit element of X' on which Phi attains its norm.
  const SpaceModel dual_model = model.dual();
  const DualityResult inner = duality_map(dual_model, DualFunctional(phi.vector()));
  ReflexivityWitness out;
  out.scale = inner.scale;
  out.support = as_functional(inner.point);
  const DualityResult outer = duality_map(model, out.support);
  out.witness = out.scale * outer.point;
  return out;
}

GateauxProfile gateaux_fd_check(const SpaceModel& model, const RealFunction& x,
                                const RealFunction& u, std::span<const double> steps) {
  check_dimension(model.space(), u.size(), "direction");
  const DualFunctional gradient = norm_gradient(model, x);
  const double base = norm(model, x);
  const double slope = pairing(model.space(), gradient, u);
  GateauxProfile out;
  for (double t : steps) {
    const double r = t == 0.0 ? 0.0 : std::abs(norm(model, x + t * u) - base - t * slope);
    out.steps.push_back(t);
    out.residuals.push_back(r);
    out.ratios.push_back(t == 0.0 ? 0.0 : r / std::abs(t));
  }
  return out;
}

}  // namespace dualrep
