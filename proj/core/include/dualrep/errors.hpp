#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dualrep {

enum class ErrorKind {
  kDimensionMismatch,
  kDomain,
  kUnboundedConjugate,
  kDegenerateYoung,
  kInfeasible,
  kUnsupportedYoung,
  kGradientUndefined,
  kUndefinedDirection,
  kSolverDivergence,
  kUnsupportedModel,
  kIllConditioned,
};

std::string_view to_string(ErrorKind kind);

/// All operations in the library report failure through this exception.  The
/// kind is stable and is what the CLI uses for its exit-code mapping.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void raise(ErrorKind kind, const std::string& message);

}  // namespace dualrep
