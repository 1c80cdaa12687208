#pragma once

#include <memory>
#include <optional>

#include "optframe/function.hpp"
#include "optframe/function_traits.hpp"
#include "optframe/result.hpp"
#include "optframe/update_policies.hpp"

namespace optframe {

// Warm-restart schedule: the step size follows a half cosine from its initial
// value down to zero over a period of `period_epochs` epochs and resets at
// each period boundary, the period growing by `period_multiplier` after every
// restart.
struct SgdrSchedule {
  double period_epochs = 1.0;
  double period_multiplier = 2.0;
};

// Step size at fractional epoch position `epoch_pos` under the schedule.
double SgdrStepSize(const SgdrSchedule& schedule, double base_step_size, double epoch_pos);

// Mini-batch stochastic gradient descent over separable objectives with a
// pluggable update policy. Each step applies the policy to the batch-summed
// gradient scaled by 1 / (actual batch size).
//
// Two traversal orders are provided. kEpoch reshuffles at every epoch start
// and walks batches in order, the final batch absorbing the remainder when
// the batch size does not divide NumFunctions(). kModular walks a flat step
// counter i, starting each batch at i * batch_size mod NumFunctions() and
// reshuffling whenever that offset wraps to zero; it requires NumFunctions()
// to be a multiple of the batch size.
class Sgd {
 public:
  enum class Traversal { kEpoch, kModular };

  struct Options {
    double step_size = 0.01;
    Index batch_size = 1;
    PolicyId policy = PolicyId::kVanilla;
    PolicyOptions policy_options;
    Traversal traversal = Traversal::kEpoch;
    std::optional<SgdrSchedule> restart;
    // 0 keeps the default trace granularity (per epoch plus first and last
    // step); N > 0 additionally records every N-th step.
    Index trace_every = 0;
    StepObserver observer;
  };

  Sgd() = default;
  Sgd(Options options, TerminationConfig termination)
      : options_(std::move(options)), termination_(termination) {}

  static CapabilitySet Required();
  static constexpr const char* kName = "sgd";

  OptimizationResult Run(Function function, const ParameterVector& initial) const;

  template <typename F>
  OptimizationResult Optimize(F& function, ParameterVector& params) const {
    static_assert(traits::BatchEvaluatable<F>,
                  "objective function type does not provide a usable Evaluate() method "
                  "for stochastic gradient descent");
    static_assert(traits::BatchDifferentiable<F>,
                  "objective function type does not provide a usable Gradient() method "
                  "for stochastic gradient descent");
    static_assert(traits::HasNumFunctions<F> || traits::HasFullEvaluate<F>,
                  "objective function type does not provide a usable NumFunctions() method "
                  "for stochastic gradient descent");
    OptimizationResult result = Run(Function::Ref(function), params);
    params = result.best_params;
    return result;
  }

 private:
  Options options_;
  TerminationConfig termination_;
};

}  // namespace optframe
