#include "optframe/optimizers/sgd.hpp"

#include <cmath>
#include <random>

#include "optframe/optimizers/detail.hpp"

namespace optframe {

double SgdrStepSize(const SgdrSchedule& schedule, double base_step_size, double epoch_pos) {
  if (!(schedule.period_epochs > 0.0)) throw ConfigError("restart period must be > 0 epochs");
  if (!(schedule.period_multiplier >= 1.0)) throw ConfigError("period multiplier must be >= 1");
  double period_start = 0.0;
  double period_length = schedule.period_epochs;
  while (epoch_pos - period_start >= period_length) {
    period_start += period_length;
    period_length *= schedule.period_multiplier;
  }
  const double progress = (epoch_pos - period_start) / period_length;
  return 0.5 * base_step_size * (1.0 + std::cos(progress * M_PI));
}

CapabilitySet Sgd::Required() {
  CapabilitySet caps;
  caps.batch_evaluate = true;
  caps.batch_gradient = true;
  caps.num_functions = true;
  return caps;
}

OptimizationResult Sgd::Run(Function function, const ParameterVector& initial) const {
  if (!(options_.step_size > 0.0)) throw ConfigError("step_size must be > 0");
  if (options_.batch_size < 1) throw ConfigError("batch_size must be >= 1");
  Function f = PrepareFor(function, Required(), kName);

  OptimizationResult result;
  const Index num_functions = f.NumFunctions();
  Index batch_size = options_.batch_size;
  if (batch_size > num_functions) {
    result.warnings.push_back("batch_size " + std::to_string(batch_size) +
                              " exceeds NumFunctions() = " + std::to_string(num_functions) +
                              "; clamped");
    batch_size = num_functions;
  }
  if (options_.traversal == Traversal::kModular && num_functions % batch_size != 0) {
    throw ConfigError("modular traversal requires NumFunctions() to be a multiple of the batch size");
  }

  const detail::Stopwatch clock;
  std::mt19937_64 rng(termination_.seed);
  auto policy = MakeUpdatePolicy(options_.policy, f.Dimension(), options_.policy_options);

  ParameterVector x = initial;
  double epoch_objective = detail::InitialObjective(f, x);
  result.best_params = x;
  result.best_objective = epoch_objective;
  result.reason = TerminationReason::kMaxIterations;

  const Index steps_per_epoch = options_.traversal == Traversal::kEpoch
                                    ? (num_functions + batch_size - 1) / batch_size
                                    : num_functions / batch_size;
  const Index max_steps = termination_.max_iterations;
  const bool can_shuffle = f.Capabilities().shuffle;

  const auto record = [&](Index step, double objective) {
    if (!result.trace.empty() && result.trace.back().iteration == step) return;
    result.trace.push_back({step, f.Counts().Total(), objective,
                            std::numeric_limits<double>::quiet_NaN(), clock.Seconds()});
  };

  Index step = 0;
  bool stopped = false;
  while (step < max_steps && !stopped) {
    // One epoch: a reshuffle followed by a pass over all components.
    if (can_shuffle) f.Shuffle(rng());
    for (Index slot = 0; slot < steps_per_epoch && step < max_steps; ++slot) {
      const Index start = options_.traversal == Traversal::kEpoch
                              ? slot * batch_size
                              : (step * batch_size) % num_functions;
      const Index size = options_.traversal == Traversal::kEpoch
                             ? std::min(batch_size, num_functions - start)
                             : batch_size;

      double step_size = options_.step_size;
      if (options_.restart) {
        const double epoch_pos =
            static_cast<double>(step) / static_cast<double>(steps_per_epoch);
        step_size = SgdrStepSize(*options_.restart, options_.step_size, epoch_pos);
        // The cosine reaches zero at the period boundary; the policy needs a
        // positive value.
        step_size = std::max(step_size, 1e-300);
      }

      const optframe::Gradient batch_gradient = f.Gradient(x, BatchRange{start, size});
      const Eigen::VectorXd scaled =
          batch_gradient.ToDense() / static_cast<double>(size);
      x = policy->Apply(x, step_size, optframe::Gradient::Dense(scaled));
      ++step;
      if (options_.observer) options_.observer(step, x);

      if (!x.allFinite()) {
        result.warnings.push_back("parameters overflowed; stopping");
        result.reason = TerminationReason::kRejected;
        stopped = true;
        break;
      }
      const bool trace_step =
          step == 1 || step == max_steps ||
          (options_.trace_every > 0 && step % options_.trace_every == 0);
      if (trace_step) record(step, f.Evaluate(x, BatchRange{0, num_functions}));
    }
    if (stopped) break;

    const double objective = f.Evaluate(x, BatchRange{0, num_functions});
    record(step, objective);
    if (objective < result.best_objective) {
      result.best_objective = objective;
      result.best_params = x;
    }
    if (detail::Diverged(objective)) {
      result.reason = TerminationReason::kRejected;
      break;
    }
    if (std::abs(epoch_objective - objective) <= termination_.objective_tolerance) {
      result.reason = TerminationReason::kObjectiveTolerance;
      break;
    }
    epoch_objective = objective;
  }

  for (const std::string& warning : policy->Warnings()) result.warnings.push_back(warning);
  result.best_objective = f.Evaluate(result.best_params, BatchRange{0, num_functions});
  return result;
}

}  // namespace optframe
