#include "optframe/result.hpp"

#include <cmath>

namespace optframe {

std::string_view ToString(TerminationReason reason) {
  switch (reason) {
    case TerminationReason::kMaxIterations: return "max_iterations";
    case TerminationReason::kObjectiveTolerance: return "objective_tolerance";
    case TerminationReason::kGradientTolerance: return "gradient_tolerance";
    case TerminationReason::kStepTolerance: return "step_tolerance";
    case TerminationReason::kRejected: return "rejected";
  }
  return "unknown";
}

namespace detail {

bool Diverged(double objective) {
  return !std::isfinite(objective) || std::abs(objective) > kDivergenceLimit;
}

}  // namespace detail

}  // namespace optframe
