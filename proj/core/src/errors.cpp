#include "dualrep/errors.hpp"

namespace dualrep {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kDimensionMismatch: return "dimension-mismatch";
    case ErrorKind::kDomain: return "domain";
    case ErrorKind::kUnboundedConjugate: return "unbounded-conjugate";
    case ErrorKind::kDegenerateYoung: return "degenerate-young";
    case ErrorKind::kInfeasible: return "infeasible";
    case ErrorKind::kUnsupportedYoung: return "unsupported-young";
    case ErrorKind::kGradientUndefined: return "gradient-undefined";
    case ErrorKind::kUndefinedDirection: return "undefined-direction";
    case ErrorKind::kSolverDivergence: return "solver-divergence";
    case ErrorKind::kUnsupportedModel: return "unsupported-model";
    case ErrorKind::kIllConditioned: return "ill-conditioned";
  }
  return "unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

void raise(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

}  // namespace dualrep
