#pragma once

#include <functional>
#include <memory>
#include <utility>

#include "optframe/errors.hpp"
#include "optframe/function_traits.hpp"
#include "optframe/types.hpp"

namespace optframe {

// Component-evaluation counters. Batch calls count one unit per component in
// the range; full-interface calls on a non-separable objective count one.
struct EvaluationCounts {
  std::int64_t objective_components = 0;
  std::int64_t gradient_components = 0;

  std::int64_t Total() const { return objective_components + gradient_components; }
};

// Type-erased view of an objective function. Wraps any type that provides
// Dimension() plus some subset of the contract methods; the published
// CapabilitySet decides which methods are callable through the wrapper, and
// every call is validated and counted.
//
// Copies share the underlying problem (including its shuffle ordering) and
// the evaluation counters; adapters rely on this to present alternative
// views of one problem.
class Function {
 public:
  Function() = default;

  // Borrows `fn`; the caller keeps ownership and must outlive the wrapper.
  template <typename F>
  static Function Ref(F& fn) {
    Function out;
    out.Bind(std::shared_ptr<F>(&fn, [](F*) {}));
    return out;
  }

  // Takes ownership of `fn`.
  template <typename F>
  static Function Own(F fn) {
    Function out;
    out.Bind(std::make_shared<F>(std::move(fn)));
    return out;
  }

  bool Valid() const { return dimension_ > 0; }
  Index Dimension() const { return dimension_; }
  const CapabilitySet& Capabilities() const { return caps_; }

  double Evaluate(const ParameterVector& params) const;
  double Evaluate(const ParameterVector& params, BatchRange range) const;
  optframe::Gradient Gradient(const ParameterVector& params) const;
  optframe::Gradient Gradient(const ParameterVector& params, BatchRange range) const;
  optframe::Gradient PartialGradient(const ParameterVector& params, Index feature) const;
  Index NumFunctions() const;
  Index NumFeatures() const;
  void Shuffle(std::uint64_t seed);

  // Objective over the whole problem: Evaluate(x) when available, otherwise
  // the batch form over [0, NumFunctions()).
  double TotalObjective(const ParameterVector& params) const;

  const EvaluationCounts& Counts() const { return *counters_; }
  void ResetCounts() { *counters_ = EvaluationCounts{}; }

  friend Function AdaptSeparableToFull(const Function& f);
  friend Function AdaptFullToSeparable(const Function& f);

 private:
  template <typename F>
  void Bind(std::shared_ptr<F> fn);

  void RequireSlot(bool present, const char* method) const;

  std::shared_ptr<void> holder_;
  std::shared_ptr<EvaluationCounts> counters_;
  Index dimension_ = 0;
  CapabilitySet caps_;

  std::function<double(const ParameterVector&)> eval_full_;
  std::function<double(const ParameterVector&, BatchRange)> eval_batch_;
  std::function<optframe::Gradient(const ParameterVector&)> grad_full_;
  std::function<optframe::Gradient(const ParameterVector&, BatchRange)> grad_batch_;
  std::function<optframe::Gradient(const ParameterVector&, Index)> partial_grad_;
  std::function<Index()> num_functions_;
  std::function<Index()> num_features_;
  std::function<void(std::uint64_t)> shuffle_;
};

template <typename F>
void Function::Bind(std::shared_ptr<F> fn) {
  static_assert(traits::HasDimension<F>,
                "objective function type must provide Dimension()");
  static_assert(traits::HasFullEvaluate<F> || traits::HasBatchEvaluate<F>,
                "objective function type must provide an Evaluate() method");

  const CapabilitySet detected = traits::DetectCapabilities<F>();
  CapabilitySet published;
  if constexpr (traits::HasCapabilities<F>) {
    published = fn->Capabilities();
  } else {
    published = detected;
  }

  // sparse_gradient is a runtime property; exclude it from the static check.
  CapabilitySet static_bits = published;
  static_bits.sparse_gradient = false;
  if (!detected.Contains(static_bits)) {
    throw ContractViolation(
        "published capabilities include methods the type does not implement; "
        "published: " + published.Describe() + ", detected: " + detected.Describe());
  }
  for (const std::string& violation : published.InvariantViolations()) {
    throw ContractViolation("inconsistent capability set: " + violation);
  }

  holder_ = fn;
  counters_ = std::make_shared<EvaluationCounts>();
  dimension_ = fn->Dimension();
  if (dimension_ < 1) {
    throw ContractViolation("objective function reports dimension < 1");
  }
  caps_ = published;

  F* p = fn.get();
  auto counts = counters_;
  if constexpr (traits::HasFullEvaluate<F>) {
    if (published.full_evaluate) {
      eval_full_ = [p, counts](const ParameterVector& x) {
        counts->objective_components += 1;
        return p->Evaluate(x);
      };
    }
  }
  if constexpr (traits::HasBatchEvaluate<F>) {
    if (published.batch_evaluate) {
      eval_batch_ = [p, counts](const ParameterVector& x, BatchRange r) {
        counts->objective_components += r.size;
        return p->Evaluate(x, r);
      };
    }
  }
  if constexpr (traits::HasFullGradient<F>) {
    if (published.full_gradient) {
      grad_full_ = [p, counts](const ParameterVector& x) {
        counts->gradient_components += 1;
        return p->Gradient(x);
      };
    }
  }
  if constexpr (traits::HasBatchGradient<F>) {
    if (published.batch_gradient) {
      grad_batch_ = [p, counts](const ParameterVector& x, BatchRange r) {
        counts->gradient_components += r.size;
        return p->Gradient(x, r);
      };
    }
  }
  if constexpr (traits::HasPartialGradient<F>) {
    if (published.partial_gradient) {
      partial_grad_ = [p, counts](const ParameterVector& x, Index j) {
        counts->gradient_components += 1;
        return p->PartialGradient(x, j);
      };
    }
  }
  if constexpr (traits::HasNumFunctions<F>) {
    if (published.num_functions) {
      num_functions_ = [p]() { return static_cast<Index>(p->NumFunctions()); };
    }
  }
  if constexpr (traits::HasNumFeatures<F>) {
    if (published.num_features) {
      num_features_ = [p]() { return static_cast<Index>(p->NumFeatures()); };
    }
  }
  if constexpr (traits::HasShuffle<F>) {
    if (published.shuffle) {
      shuffle_ = [p](std::uint64_t seed) { p->Shuffle(seed); };
    }
  }
}

}  // namespace optframe
