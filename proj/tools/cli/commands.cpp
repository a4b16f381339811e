#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dualrep/convexity.hpp"
#include "dualrep/errors.hpp"
#include "dualrep/extension.hpp"
#include "dualrep/sampling.hpp"

namespace dualrep::cli {
namespace {

const SpaceModel& need_model(const ProblemFile& problem, const std::string& command) {
  if (!problem.model) throw InputError(command + ": --model is required");
  return *problem.model;
}

const RealFunction& need_input(const ProblemFile& problem, const std::string& command) {
  if (!problem.input) throw InputError(command + ": --input is required");
  return *problem.input;
}

const DualFunctional& need_functional(const ProblemFile& problem, const std::string& command) {
  if (!problem.functional) throw InputError(command + ": --functional is required");
  return *problem.functional;
}

template <class T>
T need(const std::optional<T>& value, const std::string& command, const char* flag) {
  if (!value) throw InputError(command + ": " + flag + " is required");
  return *value;
}

Json header(const std::string& command, const Options& options, const ProblemFile& problem) {
  Json body = Json::object();
  body["command"] = command;
  body["seed"] = options.seed;
  if (problem.model) {
    body["model"] = problem.model->describe();
    body["dimension"] = problem.model->dimension();
  }
  return body;
}

Report finish(Json body, const Contracts& contracts) {
  body["contracts"] = contracts.json();
  body["pass"] = contracts.all_pass();
  return {std::move(body), contracts.all_pass()};
}

double relative(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

/// Smallest 1 - pairing(y_hat, z) over seeded random unit z.
double maximality_margin(const SpaceModel& model, const DualFunctional& y_hat, std::uint64_t seed, int samples) {
  Rng rng = make_rng(seed);
  double margin = std::numeric_limits<double>::infinity();
  for (int s = 0; s < samples; ++s) {
    const RealFunction z = random_unit_function(model, rng);
    margin = std::min(margin, 1.0 - pairing(model.space(), y_hat, z));
  }
  return margin;
}

YoungFunction young_from(const Options& options, const ProblemFile& problem, const std::string& command) {
  if (!options.family) {
    if (problem.model && problem.model->is_orlicz()) return problem.model->young();
    throw InputError(command + ": --family is required (or an Orlicz --model)");
  }
  const double p = need(options.p, command, "--p");
  if (!(p > 1.0) || !std::isfinite(p)) throw InputError(command + ": domain error: --p must satisfy 1 < p < inf");
  if (*options.family == "power") return power_young(p, options.normalized.value_or(true));
  if (*options.family == "power_sum") {
    const double r = need(options.r, command, "--r");
    if (!(r > 1.0) || !std::isfinite(r)) throw InputError(command + ": domain error: --r must satisfy 1 < r < inf");
    return power_sum_young(p, r);
  }
  throw InputError(command + ": unknown family \"" + *options.family + "\" (expected power or power_sum)");
}

Report norm_command(const ProblemFile& problem, const Options& options) {
  const std::string command = "norm";
  const SpaceModel& model = need_model(problem, command);
  if (!problem.input && !problem.functional) throw InputError("norm: --input or --functional is required");
  Json body = header(command, options, problem);
  Contracts contracts;

  if (problem.input) {
    const RealFunction& f = *problem.input;
    Json solver = Json::object();
    double n = 0.0;
    if (model.is_orlicz()) {
      const LuxemburgSolve s = luxemburg_solve(model, f);
      n = s.norm;
      solver["method"] = "luxemburg bisection";
      solver["iterations"] = s.iterations;
      solver["bracket"] = Json::array({s.lower, s.upper});
      if (n > 0.0) {
        contracts.check("luxemburg modular at the norm |sum P(f/k) mu - 1|",
                        std::abs(modular(model, (1.0 / n) * f) - 1.0), 1e-9);
        contracts.check("luxemburg bracket relative width", (s.upper - s.lower) / n, 1e-12);
      }
      if (const auto& power = model.young().power(); power && power->normalized) {
        // P(u) = |u|^p / p gives Lux = p^{-1/p} |f|_p.
        const double lp = lebesgue_norm(model.space(), f.values(), power->p);
        body["normalization"] = {{"lp_norm", lp}, {"factor", std::pow(power->p, -1.0 / power->p)}};
      }
    } else {
      n = norm(model, f);
      solver["method"] = "closed form";
    }
    body["norm"] = n;
    body["solver"] = solver;
    if (n > 0.0) contracts.check("homogeneity |N(2f) - 2N(f)| / N(f)", std::abs(norm(model, 2.0 * f) - 2.0 * n) / n, 1e-12);
  }

  if (problem.functional) {
    const DualFunctional& g = *problem.functional;
    Json solver = Json::object();
    double dn = 0.0;
    if (model.is_orlicz()) {
      const OrliczSolve s = orlicz_solve(model, g);
      dn = s.norm;
      solver["method"] = "multiplier bisection";
      solver["multiplier"] = s.multiplier;
      solver["iterations"] = s.iterations;
      solver["maximizer"] = to_json(s.maximizer.values());
      if (!g.is_zero()) {
        const double amemiya = orlicz_norm_amemiya(model, g);
        solver["amemiya"] = amemiya;
        contracts.check("orlicz norm vs amemiya formula, relative", relative(dn, amemiya), 1e-6);
        contracts.check("maximizer modular |sum P(f) mu - 1|", std::abs(modular(model, s.maximizer) - 1.0), 1e-9);
      }
    } else {
      dn = dual_norm(model, g);
      solver["method"] = "closed form";
    }
    body["dual_norm"] = dn;
    body["dual_solver"] = solver;
  }

  if (problem.input && problem.functional) {
    const double slack = holder_check(model, *problem.input, *problem.functional);
    body["holder_slack"] = slack;
    contracts.check("hoelder slack N(f) N'(g) - sum |f g| mu", slack, -1e-9, Relation::kAtLeast);
  }
  return finish(std::move(body), contracts);
}

Report conjugate_command(const ProblemFile& problem, const Options& options) {
  const std::string command = "conjugate";
  const YoungFunction young = young_from(options, problem, command);
  const double v = need(options.v, command, "--v");
  if (!std::isfinite(v)) throw InputError("conjugate: --v must be finite");
  const ConjugateSolve s = conjugate_solve(young, v);

  Json body = Json::object();
  body["command"] = command;
  body["young"] = young.label();
  body["v"] = v;
  body["value"] = s.value;
  body["maximizer"] = s.maximizer;
  body["iterations"] = s.iterations;
  Contracts contracts;
  const double scale = std::max(1.0, std::abs(s.value));
  contracts.check("fenchel equality |P(u*) + Q(v) - u*|v|| / max(1, Q)",
                  std::abs(young(s.maximizer) + s.value - s.maximizer * std::abs(v)) / scale, 1e-8);
  if (const auto& power = young.power()) {
    const double q = conjugate_exponent(power->p);
    // Q(v) = |v|^q / q, or (p - 1)(|v|/p)^q without the 1/p normalization.
    const double closed = power->normalized ? std::pow(std::abs(v), q) / q
                                            : (power->p - 1.0) * std::pow(std::abs(v) / power->p, q);
    body["closed_form"] = closed;
    contracts.check("closed form |Q(v) - Q_closed(v)| / max(1, Q)", std::abs(s.value - closed) / scale, 1e-8);
  }
  return finish(std::move(body), contracts);
}

Report dualize_command(const ProblemFile& problem, const Options& options) {
  const std::string command = "dualize";
  const SpaceModel& model = need_model(problem, command);
  const DualFunctional& y = need_functional(problem, command);
  const DualityResult m = duality_map(model, y);
  const DualFunctional y_hat = (1.0 / m.scale) * y;

  Json body = header(command, options, problem);
  body["point"] = to_json(m.point.values());
  body["functional"] = to_json(m.functional.values());
  body["scale"] = m.scale;
  body["multiplier"] = m.multiplier;
  body["action"] = m.action;
  body["residual"] = m.residual;
  body["residual_sup"] = max_abs((m.functional - y_hat).values());
  Contracts contracts;
  contracts.check("|norm(point) - 1|", std::abs(norm(model, m.point) - 1.0), 1e-9);
  contracts.check("|pairing(y_hat, point) - 1|", std::abs(m.action - 1.0), 1e-8);
  contracts.check("dual norm of N'(point) - y_hat", m.residual, 1e-7);
  contracts.check("|dual norm of N'(point) - 1|", std::abs(dual_norm(model, m.functional) - 1.0), 1e-8);
  const double margin = maximality_margin(model, y_hat, options.seed, options.samples.value_or(1000));
  body["maximality_margin"] = margin;
  contracts.check("min over random unit z of 1 - pairing(y_hat, z)", margin, 0.0, Relation::kAbove);
  return finish(std::move(body), contracts);
}

Report represent_command(const ProblemFile& problem, const Options& options) {
  const std::string command = "represent";
  const SpaceModel& model = need_model(problem, command);
  const DualFunctional& y = need_functional(problem, command);
  const RieszRepresentation r = riesz_represent(model, y, options.seed, options.trials.value_or(100));

  Json body = header(command, options, problem);
  body["density"] = to_json(r.density.values());
  body["probes"] = r.probes;
  body["max_defect"] = r.max_defect;
  Contracts contracts;
  contracts.check("max |pairing(g, f) - pairing(y, f)| / |f|", r.max_defect, 1e-8);
  return finish(std::move(body), contracts);
}

Report extend_command(const ProblemFile& problem, const Options& options) {
  const std::string command = "extend";
  const SpaceModel& model = need_model(problem, command);
  if (problem.subspace.empty()) throw InputError("extend: --subspace is required");
  if (!problem.action) throw InputError("extend: --action is required");
  const Subspace sub(model.space(), problem.subspace);
  const SubFunctional y1{*problem.action};
  ExtensionOptions eopts;
  eopts.seed = options.seed;
  const Extension e = extend_functional(model, sub, y1, eopts);

  Json body = header(command, options, problem);
  body["subspace_dimension"] = sub.size();
  body["gram_determinant"] = sub.gram_determinant();
  body["subspace_norm"] = e.subspace_norm;
  body["dual_norm"] = e.dual_norm;
  body["functional"] = to_json(e.functional.values());
  body["maximizer"] = to_json(e.maximizer.values());
  body["maximizer_coefficients"] = to_json(e.maximizer_coefficients);
  body["restriction_defect"] = e.restriction_defect;
  body["optimizer"] = {{"iterations", e.iterations}, {"gradient_norm", e.gradient_norm}, {"converged", e.converged}};
  Contracts contracts;
  const double scale = std::max(1.0, e.subspace_norm);
  contracts.check("|dual norm of y - subspace norm of y1|", std::abs(e.dual_norm - e.subspace_norm), 1e-7);
  contracts.check("max_j |y(b_j) - y1_j|", e.restriction_defect, 1e-7 * scale);
  contracts.check("|norm(x1) - 1|", std::abs(norm(model, e.maximizer) - 1.0), 1e-8);
  contracts.check("|pairing(y, x1) - subspace norm|",
                  std::abs(pairing(model.space(), e.functional, e.maximizer) - e.subspace_norm), 1e-8 * scale);

  if (const int trials = options.probe.value_or(0); trials > 0) {
    const UniquenessReport u = uniqueness_probe(model, sub, y1, e.functional, trials, options.seed);
    body["probe"] = {{"trials", u.trials},
                     {"annihilator_dimension", u.annihilator_dimension},
                     {"best_dual_norm", u.best_dual_norm},
                     {"best_distance", u.best_distance},
                     {"max_distance", u.max_distance},
                     {"iterations", u.iterations}};
    contracts.check("probe: distance of the best competitor to y", u.best_distance, 1e-6);
    contracts.check("probe: max distance of optimized competitors to y", u.max_distance, 1e-5);
    contracts.check("probe: dual norm gain over y", u.extension_dual_norm - u.best_dual_norm, 1e-9);
  }
  return finish(std::move(body), contracts);
}

Report modulus_command(const ProblemFile& problem, const Options& options) {
  const std::string command = "modulus";
  const SpaceModel& model = need_model(problem, command);
  const double eps = need(options.eps, command, "--eps");
  const ConvexityModulus m = modulus_estimate(model, eps, options.samples.value_or(10000), options.seed);

  Json body = header(command, options, problem);
  body["epsilon"] = m.epsilon;
  body["delta_estimate"] = m.delta_estimate;
  body["estimator"] = m.estimator;
  body["samples"] = m.samples;
  body["refinements"] = m.refinements;
  body["x"] = to_json(m.x.values());
  body["y"] = to_json(m.y.values());
  Contracts contracts;
  contracts.check("|norm(x) - 1|", std::abs(norm(model, m.x) - 1.0), 1e-9);
  contracts.check("|norm(y) - 1|", std::abs(norm(model, m.y) - 1.0), 1e-9);
  contracts.check("norm(x - y) - eps", norm(model, m.x - m.y) - eps, -1e-9, Relation::kAtLeast);
  contracts.check("|delta - (1 - norm((x + y) / 2))|",
                  std::abs(m.delta_estimate - (1.0 - norm(model, 0.5 * (m.x + m.y)))), 1e-12);
  contracts.check("delta estimate", m.delta_estimate, 0.0, Relation::kAbove);
  if (model.is_hilbert()) {
    const double closed = 1.0 - std::sqrt(1.0 - eps * eps / 4.0);
    body["closed_form"] = closed;
    contracts.check("|delta - (1 - sqrt(1 - eps^2 / 4))|", std::abs(m.delta_estimate - closed), 1e-4);
  }
  return finish(std::move(body), contracts);
}

Report probe_m_command(const ProblemFile& problem, const Options& options) {
  const std::string command = "probe-m";
  const SpaceModel& model = need_model(problem, command);
  const DualFunctional& y = need_functional(problem, command);
  std::vector<double> sizes = options.sizes;
  if (sizes.empty()) sizes = {0.0, 1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6};
  const std::vector<ContinuityRow> rows = m_continuity_probe(model, y, sizes, options.seed, options.samples.value_or(8));
  const double dn = dual_norm(model, y);

  Json body = header(command, options, problem);
  Json table = Json::array();
  Contracts contracts;
  double largest = -1.0;
  double at_largest = 0.0;
  double smallest = std::numeric_limits<double>::infinity();
  double at_smallest = 0.0;
  for (const ContinuityRow& row : rows) {
    Json r = Json::object();
    r["size"] = row.size;
    r["max_displacement"] = row.max_displacement;
    r["mean_displacement"] = row.mean_displacement;
    r["samples"] = row.samples;
    if (model.is_hilbert()) {
      const double bound = 2.0 * row.size / dn;
      r["hilbert_bound"] = bound;
      r["pass"] = row.max_displacement <= bound + 1e-12;
      contracts.check("displacement - 2s/|y| at s = " + format_number(row.size, Format::kJson),
                      row.max_displacement - bound, 1e-12);
    }
    if (row.size == 0.0) contracts.check("displacement at s = 0", row.max_displacement, 0.0);
    if (row.size > 0.0 && row.size <= 1e-6) {
      contracts.check("displacement at s = " + format_number(row.size, Format::kJson), row.max_displacement, 1e-3);
    }
    if (row.size > largest) {
      largest = row.size;
      at_largest = row.max_displacement;
    }
    if (row.size > 0.0 && row.size < smallest) {
      smallest = row.size;
      at_smallest = row.max_displacement;
    }
    table.push_back(std::move(r));
  }
  if (largest > smallest) {
    contracts.check("displacement at the smallest size minus at the largest", at_smallest - at_largest, 0.0);
  }
  body["dual_norm"] = dn;
  body["rows"] = std::move(table);
  return finish(std::move(body), contracts);
}

Report sequence_command(const ProblemFile& problem, const Options& options) {
  const std::string command = "sequence";
  const SpaceModel& model = need_model(problem, command);
  const DualFunctional& y = need_functional(problem, command);
  const SequenceDiagnostics d = maximizing_sequence_experiment(model, y, options.steps.value_or(48), options.seed);

  Json body = header(command, options, problem);
  body["maximizer"] = to_json(d.maximizer.values());
  body["midpoint_margin"] = d.midpoint_margin;
  Json table = Json::array();
  double worst_gap = -std::numeric_limits<double>::infinity();
  double worst_rise = 0.0;
  for (std::size_t k = 0; k < d.points.size(); ++k) {
    const double bound = 1.0 / static_cast<double>(k + 1);
    worst_gap = std::max(worst_gap, d.gaps[k] - bound);
    if (k > 0) worst_rise = std::max(worst_rise, d.tail_diameters[k] - d.tail_diameters[k - 1]);
    table.push_back({{"step", k + 1},
                     {"gap", d.gaps[k]},
                     {"gap_bound", bound},
                     {"distance_to_maximizer", d.distances_to_maximizer[k]},
                     {"tail_diameter", d.tail_diameters[k]}});
  }
  body["rows"] = std::move(table);
  Contracts contracts;
  contracts.check("max_n gap_n - 1/n", worst_gap, 0.0);
  contracts.check("max tail diameter increase", worst_rise, 1e-9);
  contracts.check("min over pairs of norm(mid) - pairing(y_hat, mid)", d.midpoint_margin, -1e-9, Relation::kAtLeast);
  if (d.points.size() >= 48) {
    contracts.check("|x_last - M(y)|", d.distances_to_maximizer.back(), 1e-6);
  }
  return finish(std::move(body), contracts);
}

Report mazur_command(const ProblemFile& problem, const Options& options) {
  const std::string command = "mazur";
  const double p = need(options.p, command, "--p");
  const RealFunction& h = need_input(problem, command);
  const MeasureSpace space = problem.model ? problem.model->space() : MeasureSpace::uniform(h.size());
  const RealFunction image = mazur_map(p, h);
  const RealFunction back = mazur_inverse(p, image);
  const double q = conjugate_exponent(p);

  Json body = header(command, options, problem);
  body["p"] = p;
  body["q"] = q;
  body["image"] = to_json(image.values());
  body["inverse_of_image"] = to_json(back.values());
  Contracts contracts;
  contracts.check("max |F^{-1}(F(h)) - h|", max_abs((back - h).values()), 1e-10);
  const double lhs = lebesgue_norm(space, image.values(), q);
  const double rhs = std::pow(lebesgue_norm(space, h.values(), p), p / q);
  body["image_lq_norm"] = lhs;
  contracts.check("| |F(h)|_q - |h|_p^{p/q} |", std::abs(lhs - rhs), 1e-9);
  return finish(std::move(body), contracts);
}

double parameter_number(const Json& params, const char* key) {
  if (!params[key].is_number()) throw InputError(std::string("parameters.") + key + ": expected a number");
  return params[key].get<double>();
}

}  // namespace

Json to_json(std::span<const double> values) {
  Json out = Json::array();
  for (double v : values) out.push_back(v);
  return out;
}

void apply_parameters(Options& options, const ProblemFile& problem) {
  const auto& params = problem.parameters;
  const auto integer = [&](const char* key, std::optional<int>& slot) {
    if (slot || !params.contains(key)) return;
    if (!params[key].is_number_integer()) throw InputError(std::string("parameters.") + key + ": expected an integer");
    slot = params[key].get<int>();
  };
  const auto real = [&](const char* key, std::optional<double>& slot) {
    if (!slot && params.contains(key)) slot = parameter_number(params, key);
  };
  integer("trials", options.trials);
  integer("n", options.n);
  integer("samples", options.samples);
  integer("steps", options.steps);
  integer("probe", options.probe);
  real("p", options.p);
  real("r", options.r);
  real("eps", options.eps);
  real("v", options.v);
  if (!options.normalized && params.contains("normalized")) {
    if (!params["normalized"].is_boolean()) throw InputError("parameters.normalized: expected true or false");
    options.normalized = params["normalized"].get<bool>();
  }
  if (!options.family && params.contains("family")) {
    if (!params["family"].is_string()) throw InputError("parameters.family: expected a string");
    options.family = params["family"].get<std::string>();
  }
  if (options.sizes.empty() && params.contains("sizes")) {
    if (!params["sizes"].is_array()) throw InputError("parameters.sizes: expected an array of numbers");
    for (const auto& s : params["sizes"]) {
      if (!s.is_number()) throw InputError("parameters.sizes: expected an array of numbers");
      options.sizes.push_back(s.get<double>());
    }
  }
  static const std::vector<std::string> known = {"trials", "n", "samples", "steps", "probe", "p",
                                                 "r", "eps", "v", "normalized", "family", "sizes"};
  for (const auto& item : params.items()) {
    if (std::find(known.begin(), known.end(), item.key()) == known.end()) {
      throw InputError(problem.source + ": unknown parameter \"" + item.key() + "\"");
    }
  }
}

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {"norm", "conjugate", "dualize", "represent", "extend",
                                                 "modulus", "probe-m", "sequence", "mazur", "verify"};
  return names;
}

Format default_format(const std::string& command) {
  return command == "verify" || command == "probe-m" ? Format::kCsv : Format::kJson;
}

Report run_command(const std::string& name, const ProblemFile& problem, const Options& options) {
  if (name == "norm") return norm_command(problem, options);
  if (name == "conjugate") return conjugate_command(problem, options);
  if (name == "dualize") return dualize_command(problem, options);
  if (name == "represent") return represent_command(problem, options);
  if (name == "extend") return extend_command(problem, options);
  if (name == "modulus") return modulus_command(problem, options);
  if (name == "probe-m") return probe_m_command(problem, options);
  if (name == "sequence") return sequence_command(problem, options);
  if (name == "mazur") return mazur_command(problem, options);
  if (name == "verify") return run_verify(options.suite, options);
  throw InputError("unknown command \"" + name + "\"");
}

}  // namespace dualrep::cli
