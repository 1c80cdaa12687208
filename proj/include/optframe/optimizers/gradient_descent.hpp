#pragma once

#include "optframe/function.hpp"
#include "optframe/function_traits.hpp"
#include "optframe/result.hpp"

namespace optframe {

// Fixed-step steepest descent: x <- x - step_size * grad f(x).
// Requires the full Evaluate and Gradient forms (adapters allowed).
class GradientDescent {
 public:
  struct Options {
    double step_size = 0.01;
    StepObserver observer;
  };

  GradientDescent() = default;
  GradientDescent(Options options, TerminationConfig termination)
      : options_(std::move(options)), termination_(termination) {}

  static CapabilitySet Required();
  static constexpr const char* kName = "gradient_descent";

  OptimizationResult Run(Function function, const ParameterVector& initial) const;

  template <typename F>
  OptimizationResult Optimize(F& function, ParameterVector& params) const {
    static_assert(traits::FullyEvaluatable<F>,
                  "objective function type does not provide a usable Evaluate() method "
                  "for gradient descent");
    static_assert(traits::FullyDifferentiable<F>,
                  "objective function type does not provide a usable Gradient() method "
                  "for gradient descent");
    OptimizationResult result = Run(Function::Ref(function), params);
    params = result.best_params;
    return result;
  }

 private:
  Options options_;
  TerminationConfig termination_;
};

}  // namespace optframe
