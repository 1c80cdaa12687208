#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "optframe/types.hpp"

namespace optframe {

enum class TerminationReason {
  kMaxIterations,
  kObjectiveTolerance,
  kGradientTolerance,
  kStepTolerance,
  kRejected,  // objective diverged or went non-finite
};

std::string_view ToString(TerminationReason reason);

struct TerminationConfig {
  Index max_iterations = 100000;
  // Stop when |f_new - f_old| between successive full evaluations drops below
  // this (per epoch / sweep for the stochastic optimizers).
  double objective_tolerance = 1e-10;
  // Gradient-based optimizers stop when the 2-norm of the full gradient drops
  // below this.
  double gradient_tolerance = 1e-9;
  std::uint64_t seed = 0;
};

struct TracePoint {
  Index iteration = 0;
  std::int64_t evaluations = 0;  // cumulative component evaluations
  double objective = 0.0;
  double gradient_norm = 0.0;  // NaN when not computed at this point
  double elapsed_seconds = 0.0;
};

struct OptimizationResult {
  ParameterVector best_params;
  double best_objective = 0.0;
  std::vector<TracePoint> trace;
  TerminationReason reason = TerminationReason::kMaxIterations;
  std::vector<std::string> warnings;
};

// Observation hook invoked after every accepted parameter update.
using StepObserver = std::function<void(Index step, const ParameterVector& params)>;

namespace detail {

// Any objective beyond this magnitude (or non-finite) is treated as
// divergence; optimizers stop with TerminationReason::kRejected.
inline constexpr double kDivergenceLimit = 1e100;

bool Diverged(double objective);

}  // namespace detail

}  // namespace optframe
