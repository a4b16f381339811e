#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "problem.hpp"
#include "report.hpp"

namespace dualrep::cli {

/// Command parameters after merging flags over problem-file parameters.
struct Options {
  std::uint64_t seed = 0;
  std::optional<int> trials;
  std::optional<int> n;
  std::optional<int> samples;
  std::optional<int> steps;
  std::optional<int> probe;
  std::optional<double> p;
  std::optional<double> r;
  std::optional<double> eps;
  std::optional<double> v;
  std::optional<bool> normalized;
  std::optional<std::string> family;
  std::vector<double> sizes;
  /// Module name for `verify`.
  std::string suite;
};

/// Fills options not set on the command line from problem.parameters.
void apply_parameters(Options& options, const ProblemFile& problem);

const std::vector<std::string>& command_names();
const std::vector<std::string>& suite_names();

/// Formats used when --format is not given.
Format default_format(const std::string& command);

/// Dispatches to the module operation.  Library errors propagate as
/// dualrep::Error (exit 1), missing inputs as InputError (exit 2).
Report run_command(const std::string& name, const ProblemFile& problem, const Options& options);

/// Property suites of one module, or of all of them for suite == "all".
Report run_verify(const std::string& suite, const Options& options);

Json to_json(std::span<const double> values);

}  // namespace dualrep::cli
