#include <cmath>
#include <limits>

#include "commands.hpp"
#include "dualrep/convexity.hpp"
#include "dualrep/errors.hpp"
#include "dualrep/extension.hpp"
#include "dualrep/sampling.hpp"

namespace dualrep::cli {
namespace {

struct Sweep {
  Json rows = Json::array();
  Json tolerances = Json::object();
  int failures = 0;
};

/// One CSV line: identifying columns, then value / tolerance pairs.
class Row {
 public:
  Row(Sweep& sweep, const std::string& suite, const std::string& model, int trial) : sweep_(sweep), suite_(suite) {
    data_["suite"] = suite;
    data_["model"] = model;
    data_["trial"] = trial;
  }

  void info(const std::string& key, const Json& value) { data_[key] = value; }

  void check(const std::string& key, double value, double tolerance, Relation relation = Relation::kAtMost) {
    bool ok = false;
    const char* symbol = "<=";
    switch (relation) {
      case Relation::kAtMost:
        ok = value <= tolerance;
        break;
      case Relation::kAtLeast:
        ok = value >= tolerance;
        symbol = ">=";
        break;
      case Relation::kAbove:
        ok = value > tolerance;
        symbol = ">";
        break;
    }
    data_[key] = value;
    data_[key + "_tol"] = tolerance;
    pass_ = pass_ && ok;
    const std::string name = suite_ + "." + key;
    if (!sweep_.tolerances.contains(name)) sweep_.tolerances[name] = {{"relation", symbol}, {"tolerance", tolerance}};
  }

  void commit() {
    data_["pass"] = pass_;
    if (!pass_) ++sweep_.failures;
    sweep_.rows.push_back(std::move(data_));
  }

 private:
  Sweep& sweep_;
  std::string suite_;
  Json data_ = Json::object();
  bool pass_ = true;
};

double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

std::vector<SpaceModel> standard_models(const MeasureSpace& space, double p) {
  return {SpaceModel::hilbert(space), SpaceModel::lebesgue(space, p), SpaceModel::orlicz(space, power_young(p))};
}

double abs_pairing(const MeasureSpace& space, const DualFunctional& g, const RealFunction& f) {
  double s = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) s += std::abs(g[i] * f[i]) * space.weight(i);
  return s;
}

void measure_space_suite(Sweep& sweep, const Options& o) {
  const std::size_t n = static_cast<std::size_t>(*o.n);
  Rng rng = make_rng(o.seed);
  for (int t = 1; t <= *o.trials; ++t) {
    const MeasureSpace space = random_space(rng, n);
    const RealFunction f = random_function(rng, n);
    const RealFunction h = random_function(rng, n);
    const DualFunctional g = random_functional(rng, n);
    const double a = uniform(rng, -2.0, 2.0);
    const double b = uniform(rng, -2.0, 2.0);
    Row row(sweep, "measure_space", "atoms=" + std::to_string(n), t);
    const double scale = 1.0 + std::abs(a) * abs_pairing(space, g, f) + std::abs(b) * abs_pairing(space, g, h);
    row.check("linearity", std::abs(pairing(space, g, a * f + b * h) - a * pairing(space, g, f) - b * pairing(space, g, h)) / scale,
              1e-12);
    RealFunction ones = RealFunction(std::vector<double>(n, 1.0));
    const double mass = abs_pairing(space, as_functional(ones), f) + 1.0;
    row.check("integral_vs_pairing", std::abs(integrate(space, f) - pairing(space, as_functional(ones), f)) / mass, 1e-13);
    row.check("total_mass", std::abs(integrate(space, ones) - space.total_mass()) / space.total_mass(), 1e-13);
    row.check("symmetry", std::abs(pairing(space, as_functional(f), h) - pairing(space, as_functional(h), f)) /
                              (1.0 + abs_pairing(space, as_functional(f), h)),
              1e-15);
    row.commit();
  }
}

void young_suite(Sweep& sweep, const Options& o) {
  const double p = *o.p;
  const double q = conjugate_exponent(p);
  const YoungFunction young = power_young(p);
  Rng rng = make_rng(o.seed);
  {
    Row row(sweep, "young", young.label(), 0);
    row.check("admissible", young.admissibility().admissible() ? 1.0 : 0.0, 1.0, Relation::kAtLeast);
    row.check("conjugate_admissible", conjugate_young(young).admissibility().admissible() ? 1.0 : 0.0, 1.0,
              Relation::kAtLeast);
    row.check("delta2_error", std::abs(delta2_constant(young) - std::pow(2.0, p)), 1e-6);
    row.commit();
  }
  for (int t = 1; t <= *o.trials; ++t) {
    const double v = uniform(rng, -5.0, 5.0);
    const double u = uniform(rng, -5.0, 5.0);
    const double w = uniform(rng, -5.0, 5.0);
    const double eps = uniform(rng, 0.05, 0.95);
    Row row(sweep, "young", young.label(), t);
    row.info("v", v);
    row.info("u", u);
    row.info("eps", eps);
    const double value = conjugate(young, v);
    row.check("conjugate_error", std::abs(value - std::pow(std::abs(v), q) / q), 1e-8);
    row.check("fenchel_young_slack", young(u) + value - u * v, -1e-9, Relation::kAtLeast);
    const double rho = rho_estimate(young, eps);
    row.info("rho", rho);
    row.check("rho", rho, 0.0, Relation::kAbove);
    row.check("mcshane_slack", mcshane_check(young, eps, rho, u, w), -1e-9, Relation::kAtLeast);
    row.commit();
  }
}

void norms_suite(Sweep& sweep, const Options& o) {
  const std::size_t n = static_cast<std::size_t>(*o.n);
  const double p = *o.p;
  Rng rng = make_rng(o.seed);
  for (int t = 1; t <= *o.trials; ++t) {
    const MeasureSpace space = random_space(rng, n);
    const SpaceModel lebesgue = SpaceModel::lebesgue(space, p);
    const SpaceModel plain = SpaceModel::orlicz(space, power_young(p, false));
    const SpaceModel normalized = SpaceModel::orlicz(space, power_young(p, true));
    const SpaceModel mixed = SpaceModel::orlicz(space, power_sum_young(p, p + 1.0));
    const RealFunction f = random_function(rng, n);
    const RealFunction h = random_function(rng, n);
    const DualFunctional g = random_functional(rng, n);
    const double c = uniform(rng, -3.0, 3.0);

    const double lp = norm(lebesgue, f);
    Row row(sweep, "norms", plain.describe(), t);
    row.check("luxemburg_vs_lp", std::abs(norm(plain, f) - lp) / lp, 1e-10);
    row.check("normalized_factor", std::abs(norm(normalized, f) - std::pow(p, -1.0 / p) * lp) / lp, 1e-10);
    const double lq = dual_norm(lebesgue, g);
    row.check("orlicz_vs_lq", std::abs(dual_norm(plain, g) - lq) / lq, 1e-9);
    for (const auto& [key, model] : {std::pair<const char*, const SpaceModel*>{"amemiya_rel", &plain},
                                     {"amemiya_rel_power_sum", &mixed}}) {
      const double kkt = dual_norm(*model, g);
      row.check(key, std::abs(kkt - orlicz_norm_amemiya(*model, g)) / kkt, 1e-6);
    }
    row.check("holder_slack", holder_check(plain, f, g), -1e-9, Relation::kAtLeast);
    row.check("holder_slack_power_sum", holder_check(mixed, f, g), -1e-9, Relation::kAtLeast);
    const double nf = norm(mixed, f);
    const double nh = norm(mixed, h);
    row.check("triangle_excess", (norm(mixed, f + h) - nf - nh) / (nf + nh), 1e-12);
    row.check("homogeneity", std::abs(norm(plain, c * f) - std::abs(c) * norm(plain, f)) / (std::abs(c) * lp), 1e-12);
    row.commit();
  }
}

void duality_suite(Sweep& sweep, const Options& o) {
  const std::size_t n = static_cast<std::size_t>(*o.n);
  Rng rng = make_rng(o.seed);
  const double steps[] = {1e-2, 1e-3, 1e-4};
  for (int t = 1; t <= *o.trials; ++t) {
    const MeasureSpace space = random_space(rng, n);
    for (const SpaceModel& model : standard_models(space, *o.p)) {
      const DualFunctional y = random_functional(rng, n);
      const RealFunction x = random_unit_function(model, rng);
      const DualityResult m = duality_map(model, y);
      const DualFunctional y_hat = (1.0 / m.scale) * y;
      const DualFunctional gx = norm_gradient(model, x);

      Row row(sweep, "duality", model.describe(), t);
      row.check("roundtrip_a", m.residual, 1e-7);
      row.info("roundtrip_a_sup", max_abs((m.functional - y_hat).values()));
      row.check("roundtrip_b", norm(model, duality_point(model, gx) - x), 1e-7);
      row.check("gradient_dual_norm", std::abs(dual_norm(model, gx) - 1.0), 1e-8);
      row.check("point_norm", std::abs(norm(model, m.point) - 1.0), 1e-9);
      row.check("action", std::abs(m.action - 1.0), 1e-8);
      double margin = std::numeric_limits<double>::infinity();
      for (int s = 0; s < 100; ++s) {
        margin = std::min(margin, 1.0 - pairing(space, y_hat, random_unit_function(model, rng)));
      }
      row.check("maximality_margin", margin, 0.0, Relation::kAbove);
      row.check("riesz_defect", riesz_represent(model, y, rng(), 20).max_defect, 1e-8);

      const RealFunction u = random_function(rng, n);
      const GateauxProfile profile = gateaux_fd_check(model, x, u, steps);
      double drop = 0.0;
      for (std::size_t k = 1; k < profile.ratios.size(); ++k) drop = std::max(drop, profile.ratios[k] / profile.ratios[k - 1]);
      row.check("gateaux_ratio_drop", drop, 0.5);
      if (model.is_hilbert()) {
        const double uu = weighted_dot(u.values(), u.values(), space.weights());
        double excess = -std::numeric_limits<double>::infinity();
        for (std::size_t k = 0; k < profile.steps.size(); ++k) {
          excess = std::max(excess, profile.residuals[k] - profile.steps[k] * profile.steps[k] * uu / 2.0);
        }
        row.check("gateaux_quadratic_excess", excess, 1e-14);
      }
      if (!model.is_orlicz()) {
        const BidualElement phi(random_function(rng, n).vector());
        const ReflexivityWitness w = reflexivity_witness(model, phi);
        double worst = 0.0;
        for (int s = 0; s < 20; ++s) {
          const DualFunctional probe = random_unit_functional(model, rng);
          worst = std::max(worst, std::abs(bidual_action(space, phi, probe) - pairing(space, probe, w.witness)));
        }
        row.check("reflexivity_defect", worst / std::max(1.0, w.scale), 1e-7);
      }
      row.commit();
    }
  }
}

void extension_suite(Sweep& sweep, const Options& o) {
  const std::size_t n = static_cast<std::size_t>(*o.n);
  if (n < 2) throw InputError("verify extension: --n must be at least 2");
  Rng rng = make_rng(o.seed);
  const int probes = o.probe.value_or(2);
  for (int t = 1; t <= *o.trials; ++t) {
    const MeasureSpace space = random_space(rng, n);
    for (const SpaceModel& model : standard_models(space, *o.p)) {
      const std::size_t k = 1 + static_cast<std::size_t>(rng() % (n - 1));
      std::vector<RealFunction> basis;
      for (std::size_t j = 0; j < k; ++j) basis.push_back(random_function(rng, n));
      const Subspace sub(space, std::move(basis));
      const SubFunctional y1 = restrict(model, sub, random_functional(rng, n));
      ExtensionOptions eopts;
      eopts.seed = rng();
      const Extension e = extend_functional(model, sub, y1, eopts);
      const double scale = std::max(1.0, e.subspace_norm);

      Row row(sweep, "extension", model.describe(), t);
      row.info("subspace_dimension", k);
      row.check("norm_gap", std::abs(e.dual_norm - e.subspace_norm), 1e-7);
      row.check("restriction_defect", e.restriction_defect / scale, 1e-7);
      row.check("maximizer_norm", std::abs(norm(model, e.maximizer) - 1.0), 1e-8);
      row.check("maximizer_action", std::abs(pairing(space, e.functional, e.maximizer) - e.subspace_norm) / scale, 1e-8);
      if (probes > 0) {
        const UniquenessReport u = uniqueness_probe(model, sub, y1, e.functional, probes, rng());
        row.check("probe_best_distance", u.best_distance, 1e-6);
        row.check("probe_max_distance", u.max_distance, 1e-5);
        row.check("probe_norm_gain", u.extension_dual_norm - u.best_dual_norm, 1e-9);
      }
      row.commit();
    }
  }
}

void convexity_suite(Sweep& sweep, const Options& o) {
  const std::size_t n = static_cast<std::size_t>(*o.n);
  if (n < 2) throw InputError("verify convexity: --n must be at least 2");
  Rng rng = make_rng(o.seed);
  const double tiny[] = {1e-6};
  for (int t = 1; t <= *o.trials; ++t) {
    const MeasureSpace space = random_space(rng, n);
    for (const SpaceModel& model : standard_models(space, *o.p)) {
      const double eps = uniform(rng, 0.2, 1.8);
      const int samples = o.samples.value_or(model.is_hilbert() ? 2000 : 200);
      const ConvexityModulus m = modulus_estimate(model, eps, samples, rng());

      Row row(sweep, "convexity", model.describe(), t);
      row.info("eps", eps);
      row.info("delta_estimate", m.delta_estimate);
      row.check("delta_positive", m.delta_estimate, 0.0, Relation::kAbove);
      row.check("witness_norm", std::max(std::abs(norm(model, m.x) - 1.0), std::abs(norm(model, m.y) - 1.0)), 1e-9);
      row.check("witness_separation", norm(model, m.x - m.y) - eps, -1e-9, Relation::kAtLeast);
      if (model.is_hilbert()) {
        row.check("hilbert_modulus_error", std::abs(m.delta_estimate - (1.0 - std::sqrt(1.0 - eps * eps / 4.0))), 1e-4);
      }

      const DualFunctional y = random_functional(rng, n);
      const SequenceDiagnostics d = maximizing_sequence_experiment(model, y, o.steps.value_or(48), rng());
      double gap_excess = -std::numeric_limits<double>::infinity();
      double rise = 0.0;
      for (std::size_t k = 0; k < d.gaps.size(); ++k) {
        gap_excess = std::max(gap_excess, d.gaps[k] - 1.0 / static_cast<double>(k + 1));
        if (k > 0) rise = std::max(rise, d.tail_diameters[k] - d.tail_diameters[k - 1]);
      }
      row.check("sequence_gap_excess", gap_excess, 0.0);
      row.check("tail_diameter_rise", rise, 1e-9);
      row.check("midpoint_margin", d.midpoint_margin, -1e-9, Relation::kAtLeast);
      if (d.points.size() >= 24) row.check("sequence_limit_distance", d.distances_to_maximizer.back(), 1e-6);

      const ContinuityRow c = m_continuity_probe(model, y, tiny, rng(), 4).front();
      row.check("continuity_displacement", c.max_displacement, 1e-3);
      if (model.is_hilbert()) {
        row.check("continuity_hilbert_excess", c.max_displacement - 2.0 * c.size / dual_norm(model, y), 1e-12);
      }
      row.commit();
    }
  }
}

using SuiteFn = void (*)(Sweep&, const Options&);

const std::vector<std::pair<std::string, SuiteFn>>& suites() {
  static const std::vector<std::pair<std::string, SuiteFn>> all = {
      {"measure_space", measure_space_suite}, {"young", young_suite},         {"norms", norms_suite},
      {"duality", duality_suite},             {"extension", extension_suite}, {"convexity", convexity_suite}};
  return all;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : suites()) out.push_back(name);
    out.push_back("all");
    return out;
  }();
  return names;
}

Report run_verify(const std::string& suite, const Options& options) {
  Options o = options;
  if (!o.n) o.n = 8;
  if (!o.p) o.p = 3.0;
  if (!o.trials) o.trials = 20;
  if (*o.n < 1) throw InputError("verify: --n must be positive");
  if (*o.trials < 1) throw InputError("verify: --trials must be positive");
  if (!(*o.p > 1.0) || !std::isfinite(*o.p)) throw InputError("verify: domain error: --p must satisfy 1 < p < inf");

  Sweep sweep;
  bool found = false;
  for (const auto& [name, fn] : suites()) {
    if (suite == name || suite == "all") {
      fn(sweep, o);
      found = true;
    }
  }
  if (!found) throw InputError("verify: unknown suite \"" + suite + "\"");

  Json body = Json::object();
  body["command"] = "verify";
  body["suite"] = suite;
  body["seed"] = o.seed;
  body["parameters"] = {{"n", *o.n}, {"p", *o.p}, {"trials", *o.trials}};
  body["tolerances"] = std::move(sweep.tolerances);
  const std::size_t total = sweep.rows.size();
  body["summary"] = {{"rows", total}, {"failures", sweep.failures}, {"pass", sweep.failures == 0}};
  body["rows"] = std::move(sweep.rows);
  return {std::move(body), sweep.failures == 0};
}

}  // namespace dualrep::cli
