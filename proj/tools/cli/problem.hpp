#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "dualrep/norms.hpp"

namespace dualrep::cli {

/// Bad input: unreadable file, malformed JSON, schema or dimension errors.
/// Maps to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ProblemFile {
  std::string source;
  std::optional<SpaceModel> model;
  std::optional<RealFunction> input;
  std::optional<DualFunctional> functional;
  std::vector<RealFunction> subspace;
  std::optional<std::vector<double>> action;
  std::optional<std::uint64_t> seed;
  /// Command parameters (eps, samples, trials, ...) keyed by flag name.
  nlohmann::json parameters = nlohmann::json::object();
  /// File each item was loaded from, when it came from its own flag.
  std::map<std::string, std::string> origin;
};

std::string read_text(const std::string& path);

/// Parses a JSON document, turning syntax errors into "path:line:col: ..." messages.
nlohmann::json parse_document(const std::string& text, const std::string& source);

/// 1-based line of the value addressed by a JSON pointer in `text`, or 0.
int locate(const std::string& text, const nlohmann::json::json_pointer& pointer);

/// Loads either a bare model document ({"space", "structure"}) or a full
/// problem file ({"model", "input", "functional", "subspace", "action",
/// "seed", "parameters"}) and checks every dimension against the model.
ProblemFile load_problem(const std::string& path);

/// {"values": [...]} or a bare array.
std::vector<double> load_values(const std::string& path);

/// {"basis": [[...], ...]} or a bare array of arrays.
std::vector<RealFunction> load_subspace(const std::string& path);

/// Reads a model from an already parsed document; `where` prefixes messages.
SpaceModel parse_model(const nlohmann::json& doc, const std::string& text, const std::string& where,
                       const nlohmann::json::json_pointer& at = nlohmann::json::json_pointer());

YoungFunction parse_young(const nlohmann::json& doc, const std::string& text, const std::string& where,
                          const nlohmann::json::json_pointer& at);

/// Throws InputError unless the loaded vectors match the model dimension.
void check_dimensions(const ProblemFile& problem);

}  // namespace dualrep::cli
