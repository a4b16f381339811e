#include "dualrep/norms.hpp"

#include <cmath>
#include <sstream>

#include "dualrep/errors.hpp"

namespace dualrep {

SpaceModel::SpaceModel(MeasureSpace space, NormStructure structure)
    : space_(std::move(space)), structure_(std::move(structure)) {
  if (const auto* leb = std::get_if<LebesgueStructure>(&structure_)) {
    if (!(leb->p > 1.0) || !std::isfinite(leb->p)) {
      raise(ErrorKind::kDomain, "Lebesgue structure needs 1 < p < inf");
    }
  } else if (const auto* orl = std::get_if<OrliczStructure>(&structure_)) {
    const Admissibility& adm = orl->young.admissibility();
    if (!adm.admissible()) {
      raise(ErrorKind::kDomain, "Young function '" + orl->young.label() +
                                    "' is not admissible: " + adm.failure);
    }
    unit_level_ = orl->young.inverse(1.0 / space_.total_mass());
  }
}

SpaceModel SpaceModel::hilbert(MeasureSpace space) {
  return SpaceModel(std::move(space), HilbertStructure{});
}

SpaceModel SpaceModel::lebesgue(MeasureSpace space, double p) {
  return SpaceModel(std::move(space), LebesgueStructure{p});
}

SpaceModel SpaceModel::orlicz(MeasureSpace space, YoungFunction young) {
  return SpaceModel(std::move(space), OrliczStructure{std::move(young)});
}

double SpaceModel::exponent() const {
  const auto* leb = std::get_if<LebesgueStructure>(&structure_);
  if (!leb) raise(ErrorKind::kUnsupportedModel, "model is not a Lebesgue model");
  return leb->p;
}

const YoungFunction& SpaceModel::young() const {
  const auto* orl = std::get_if<OrliczStructure>(&structure_);
  if (!orl) raise(ErrorKind::kUnsupportedModel, "model is not an Orlicz model");
  return orl->young;
}

SpaceModel SpaceModel::dual() const {
  if (is_hilbert()) return *this;
  if (is_lebesgue()) return lebesgue(space_, conjugate_exponent(exponent()));
  raise(ErrorKind::kUnsupportedModel, "dual of an Orlicz model is not a supported structure");
}

std::string SpaceModel::describe() const {
  std::ostringstream out;
  out.precision(17);
  if (is_hilbert()) {
    out << "hilbert";
  } else if (is_lebesgue()) {
    out << "lebesgue(p=" << exponent() << ")";
  } else {
    out << "orlicz(" << young().label() << ")";
  }
  out << " n=" << dimension();
  return out.str();
}

double conjugate_exponent(double p) {
  if (!(p > 1.0) || !std::isfinite(p)) raise(ErrorKind::kDomain, "conjugate exponent needs p > 1");
  return p / (p - 1.0);
}

double lebesgue_norm(const MeasureSpace& space, std::span<const double> values, double p) {
  check_dimension(space, values.size(), "function");
  const double m = max_abs(values);
  if (m == 0.0) return 0.0;
  std::vector<double> scaled(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) scaled[i] = std::pow(std::abs(values[i]) / m, p);
  const std::vector<double> ones(values.size(), 1.0);
  return m * std::pow(weighted_dot(scaled, ones, space.weights()), 1.0 / p);
}

double modular(const SpaceModel& model, const RealFunction& f) {
  check_dimension(model.space(), f.size(), "function");
  const YoungFunction& young = model.young();
  std::vector<double> values(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) values[i] = young(f[i]);
  const std::vector<double> ones(f.size(), 1.0);
  return weighted_dot(values, ones, model.space().weights());
}

LuxemburgSolve luxemburg_solve(const SpaceModel& model, const RealFunction& f) {
  check_dimension(model.space(), f.size(), "function");
  const YoungFunction& young = model.young();
  const double m = max_abs(f.values());
  if (m == 0.0) return {};

  const auto weights = model.space().weights();
  const auto level = [&](double k) {
    double sum = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) sum += young(f[i] / k) * weights[i];
    return sum;
  };
  const double guess = m / model.unit_level();
  RootOptions options;
  options.relative_width = 0.0;
  const RootResult r = solve_monotone(level, 1.0, guess, Monotonicity::kDecreasing, options);
  return {r.root, r.lower, r.upper, r.iterations};
}

double luxemburg_norm(const SpaceModel& model, const RealFunction& f) {
  return luxemburg_solve(model, f).norm;
}

OrliczSolve orlicz_solve(const SpaceModel& model, const DualFunctional& g) {
  check_dimension(model.space(), g.size(), "functional");
  const YoungFunction& young = model.young();
  if (!young.admissibility().derivative_strictly_increasing) {
    raise(ErrorKind::kUnsupportedYoung, "orlicz_norm needs a strictly increasing P'");
  }
  OrliczSolve out;
  out.maximizer = RealFunction::zeros(g.size());
  const double m = max_abs(g.values());
  if (m == 0.0) return out;

  const auto weights = model.space().weights();
  const auto fill = [&](double lambda, RealFunction& f) {
    for (std::size_t i = 0; i < g.size(); ++i) f[i] = young.derivative_inverse(g[i] / lambda);
  };
  RealFunction trial = RealFunction::zeros(g.size());
  const auto level = [&](double lambda) {
    fill(lambda, trial);
    double sum = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) sum += young(trial[i]) * weights[i];
    return sum;
  };
  RootOptions options;
  options.relative_width = 0.0;
  const RootResult r = solve_monotone(level, 1.0, m, Monotonicity::kDecreasing, options);
  out.multiplier = r.root;
  fill(r.root, out.maximizer);
  out.norm = weighted_dot(out.maximizer.values(), g.values(), weights);
  out.iterations = r.iterations;
  return out;
}

double orlicz_norm(const SpaceModel& model, const DualFunctional& g) {
  return orlicz_solve(model, g).norm;
}

double orlicz_norm_amemiya(const SpaceModel& model, const DualFunctional& g) {
  check_dimension(model.space(), g.size(), "functional");
  const YoungFunction& young = model.young();
  const double m = max_abs(g.values());
  if (m == 0.0) return 0.0;
  const auto weights = model.space().weights();
  const auto objective = [&](double t) {
    const double k = std::exp(t);
    double sum = 1.0;
    for (std::size_t i = 0; i < g.size(); ++i) sum += conjugate(young, k * g[i]) * weights[i];
    return sum / k;
  };
  const double center = -std::log(m);
  double a = center - 25.0;
  double b = center + 25.0;
  const double ratio = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = b - ratio * (b - a);
  double d = a + ratio * (b - a);
  double fc = objective(c);
  double fd = objective(d);
  while (b - a > 1e-10) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - ratio * (b - a);
      fc = objective(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + ratio * (b - a);
      fd = objective(d);
    }
  }
  return std::min(fc, fd);
}

double norm(const SpaceModel& model, const RealFunction& f) {
  check_dimension(model.space(), f.size(), "function");
  if (model.is_hilbert()) return lebesgue_norm(model.space(), f.values(), 2.0);
  if (model.is_lebesgue()) return lebesgue_norm(model.space(), f.values(), model.exponent());
  return luxemburg_norm(model, f);
}

double dual_norm(const SpaceModel& model, const DualFunctional& g) {
  check_dimension(model.space(), g.size(), "functional");
  if (model.is_hilbert()) return lebesgue_norm(model.space(), g.values(), 2.0);
  if (model.is_lebesgue()) {
    return lebesgue_norm(model.space(), g.values(), conjugate_exponent(model.exponent()));
  }
  return orlicz_norm(model, g);
}

double holder_check(const SpaceModel& model, const RealFunction& f, const DualFunctional& g) {
  check_dimension(model.space(), f.size(), "function");
  check_dimension(model.space(), g.size(), "functional");
  std::vector<double> af(f.size());
  std::vector<double> ag(g.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    af[i] = std::abs(f[i]);
    ag[i] = std::abs(g[i]);
  }
  return norm(model, f) * dual_norm(model, g) - weighted_dot(af, ag, model.space().weights());
}

}  // namespace dualrep
