#include "optframe/optimizers/gradient_descent.hpp"

#include <cmath>
#include <limits>

#include "optframe/optimizers/detail.hpp"

namespace optframe {

CapabilitySet GradientDescent::Required() {
  CapabilitySet caps;
  caps.full_evaluate = true;
  caps.full_gradient = true;
  return caps;
}

OptimizationResult GradientDescent::Run(Function function, const ParameterVector& initial) const {
  if (!(options_.step_size > 0.0)) throw ConfigError("step_size must be > 0");
  Function f = PrepareFor(function, Required(), kName);

  const detail::Stopwatch clock;
  ParameterVector x = initial;
  double fx = detail::InitialObjective(f, x);

  OptimizationResult result;
  result.best_params = x;
  result.best_objective = fx;
  result.reason = TerminationReason::kMaxIterations;

  for (Index iter = 1; iter <= termination_.max_iterations; ++iter) {
    const optframe::Gradient gradient = f.Gradient(x);
    const double gradient_norm = gradient.Norm();
    if (!gradient.AllFinite()) {
      result.warnings.push_back("non-finite gradient; stopping");
      result.reason = TerminationReason::kRejected;
      break;
    }
    if (gradient_norm <= termination_.gradient_tolerance) {
      result.reason = TerminationReason::kGradientTolerance;
      break;
    }

    x -= options_.step_size * gradient.ToDense();
    if (!x.allFinite()) {
      result.warnings.push_back("parameters overflowed; stopping");
      result.reason = TerminationReason::kRejected;
      break;
    }
    const double fnew = f.Evaluate(x);
    result.trace.push_back({iter, f.Counts().Total(), fnew, gradient_norm, clock.Seconds()});
    if (options_.observer) options_.observer(iter, x);

    if (detail::Diverged(fnew)) {
      result.reason = TerminationReason::kRejected;
      break;
    }
    if (fnew < result.best_objective) {
      result.best_objective = fnew;
      result.best_params = x;
    }
    if (std::abs(fx - fnew) <= termination_.objective_tolerance) {
      fx = fnew;
      result.reason = TerminationReason::kObjectiveTolerance;
      break;
    }
    fx = fnew;
  }

  result.best_objective = f.Evaluate(result.best_params);
  return result;
}

}  // namespace optframe
