#include "app.hpp"

#include <chrono>
#include <cstdlib>
#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "dualrep/errors.hpp"

namespace dualrep::cli {
namespace {

struct Paths {
  std::string problem;
  std::string model;
  std::string input;
  std::string functional;
  std::string subspace;
  std::string action;
};

struct Flags {
  Paths paths;
  Options options;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> format;
  std::string out;
  bool timing = false;
};

std::uint64_t env_seed() {
  const char* raw = std::getenv("DUALREP_SEED");
  if (!raw || !*raw) return 0;
  char* end = nullptr;
  errno = 0;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (errno != 0 || *end != '\0' || raw[0] == '-') throw InputError("DUALREP_SEED: expected a nonnegative integer");
  return v;
}

void add_common(CLI::App* sub, Flags& f) {
  sub->add_option("--problem", f.paths.problem, "Problem file (model, inputs, parameters, seed)");
  sub->add_option("--seed", f.seed, "RNG seed (default: problem file, then DUALREP_SEED, then 0)");
  sub->add_option("--format", f.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("--out", f.out, "Report destination (default stdout)");
  sub->add_flag("--timing", f.timing, "Print wall time to stderr");
}

void add_model(CLI::App* sub, Flags& f) { sub->add_option("--model", f.paths.model, "Model or problem file"); }
void add_input(CLI::App* sub, Flags& f) { sub->add_option("--input", f.paths.input, "Function values file"); }
void add_functional(CLI::App* sub, Flags& f) {
  sub->add_option("--functional", f.paths.functional, "Functional coefficients file");
}

ProblemFile assemble(const Flags& f) {
  ProblemFile problem;
  if (!f.paths.problem.empty()) problem = load_problem(f.paths.problem);
  if (!f.paths.model.empty()) {
    ProblemFile from_model = load_problem(f.paths.model);
    if (f.paths.problem.empty()) {
      problem = std::move(from_model);
    } else {
      problem.model = std::move(from_model.model);
    }
  }
  if (!f.paths.model.empty()) problem.origin["model"] = f.paths.model;
  if (!f.paths.input.empty()) {
    problem.input = RealFunction(load_values(f.paths.input));
    problem.origin["input"] = f.paths.input;
  }
  if (!f.paths.functional.empty()) {
    problem.functional = DualFunctional(load_values(f.paths.functional));
    problem.origin["functional"] = f.paths.functional;
  }
  if (!f.paths.subspace.empty()) {
    problem.subspace = load_subspace(f.paths.subspace);
    problem.origin["subspace"] = f.paths.subspace;
  }
  if (!f.paths.action.empty()) {
    problem.action = load_values(f.paths.action);
    problem.origin["action"] = f.paths.action;
  }
  check_dimensions(problem);
  return problem;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& err) {
  CLI::App app{"Duality maps, norm gradients and Orlicz norms on finite measure spaces", "dualrep"};
  app.require_subcommand(1);
  Flags f;
  Options& o = f.options;

  CLI::App* norm = app.add_subcommand("norm", "Norm and/or dual norm with solver diagnostics");
  add_model(norm, f);
  add_input(norm, f);
  add_functional(norm, f);

  CLI::App* conj = app.add_subcommand("conjugate", "Convex conjugate Q(v) of a Young function");
  conj->add_option("--family", o.family, "Young family")->check(CLI::IsMember({"power", "power_sum"}));
  conj->add_option("--p", o.p, "Exponent p");
  conj->add_option("--r", o.r, "Second exponent (power_sum)");
  conj->add_option("--normalized", o.normalized, "P(u) = |u|^p / p (true) or |u|^p (false)");
  conj->add_option("--v", o.v, "Argument v");
  add_model(conj, f);

  CLI::App* dualize = app.add_subcommand("dualize", "Duality map M(y) and round-trip residuals");
  add_model(dualize, f);
  add_functional(dualize, f);
  dualize->add_option("--samples", o.samples, "Random unit points for the maximality margin");

  CLI::App* represent = app.add_subcommand("represent", "Representing density of a functional");
  add_model(represent, f);
  add_functional(represent, f);
  represent->add_option("--trials", o.trials, "Random probe functions");

  CLI::App* extend = app.add_subcommand("extend", "Norm-preserving extension from a subspace");
  add_model(extend, f);
  extend->add_option("--subspace", f.paths.subspace, "Subspace basis file");
  extend->add_option("--action", f.paths.action, "Values of y1 on the basis");
  extend->add_option("--probe", o.probe, "Uniqueness probe trials");

  CLI::App* modulus = app.add_subcommand("modulus", "Sampled estimate of the modulus of convexity");
  add_model(modulus, f);
  modulus->add_option("--eps", o.eps, "Separation eps in (0, 2]");
  modulus->add_option("--samples", o.samples, "Random unit pairs");

  CLI::App* probe = app.add_subcommand("probe-m", "Displacement of M(y) under dual perturbations");
  add_model(probe, f);
  add_functional(probe, f);
  probe->add_option("--sizes", o.sizes, "Perturbation sizes");
  probe->add_option("--samples", o.samples, "Perturbations per size");

  CLI::App* sequence = app.add_subcommand("sequence", "Maximizing sequence and tail diameters");
  add_model(sequence, f);
  add_functional(sequence, f);
  sequence->add_option("--steps", o.steps, "Sequence length");

  CLI::App* mazur = app.add_subcommand("mazur", "Mazur map l^p -> l^q and its inverse");
  mazur->add_option("--p", o.p, "Exponent p");
  add_input(mazur, f);
  add_model(mazur, f);

  CLI::App* verify = app.add_subcommand("verify", "Seeded property suite of a module");
  verify->add_option("suite", o.suite, "Module name or all")->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--n", o.n, "Atoms per random model");
  verify->add_option("--p", o.p, "Exponent");
  verify->add_option("--trials", o.trials, "Trials");
  verify->add_option("--probe", o.probe, "Uniqueness probe trials per extension");
  verify->add_option("--samples", o.samples, "Modulus samples");
  verify->add_option("--steps", o.steps, "Maximizing sequence length");

  for (CLI::App* sub : app.get_subcommands({})) add_common(sub, f);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out;
    const int code = app.exit(e, out, err);
    std::cout << out.str();
    return code == 0 ? 0 : 2;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    const ProblemFile problem = assemble(f);
    apply_parameters(o, problem);
    o.seed = f.seed ? *f.seed : problem.seed ? *problem.seed : env_seed();
    const Format format = f.format ? parse_format(*f.format) : default_format(command);

    const auto start = std::chrono::steady_clock::now();
    const Report report = run_command(command, problem, o);
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    write_report(report, format, f.out);
    if (f.timing) err << "wall_time_seconds: " << elapsed.count() << '\n';
    if (!report.passed) {
      err << command << ": contract violated (see \"pass\" fields in the report)\n";
      return 3;
    }
    return 0;
  } catch (const InputError& e) {
    err << "dualrep " << command << ": " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "dualrep " << command << ": " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "dualrep " << command << ": " << e.what() << '\n';
    return 1;
  }
}

}  // namespace dualrep::cli
