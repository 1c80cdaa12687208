#include "optframe/function.hpp"

namespace optframe {

void Function::RequireSlot(bool present, const char* method) const {
  if (!Valid()) throw ContractViolation("Function wrapper is empty");
  if (!present) {
    throw CapabilityError(std::string("the objective function does not provide ") + method +
                          "; published capabilities: " + caps_.Describe());
  }
}

double Function::Evaluate(const ParameterVector& params) const {
  RequireSlot(static_cast<bool>(eval_full_), "Evaluate(x) (full form)");
  detail::ValidateParameters(params, dimension_);
  return eval_full_(params);
}

double Function::Evaluate(const ParameterVector& params, BatchRange range) const {
  RequireSlot(static_cast<bool>(eval_batch_), "Evaluate(x, range) (batch form)");
  detail::ValidateParameters(params, dimension_);
  detail::ValidateBatchRange(range, NumFunctions());
  return eval_batch_(params, range);
}

Gradient Function::Gradient(const ParameterVector& params) const {
  RequireSlot(static_cast<bool>(grad_full_), "Gradient(x) (full form)");
  detail::ValidateParameters(params, dimension_);
  return grad_full_(params);
}

Gradient Function::Gradient(const ParameterVector& params, BatchRange range) const {
  RequireSlot(static_cast<bool>(grad_batch_), "Gradient(x, range) (batch form)");
  detail::ValidateParameters(params, dimension_);
  detail::ValidateBatchRange(range, NumFunctions());
  return grad_batch_(params, range);
}

Gradient Function::PartialGradient(const ParameterVector& params, Index feature) const {
  RequireSlot(static_cast<bool>(partial_grad_), "PartialGradient(x, j)");
  detail::ValidateParameters(params, dimension_);
  detail::ValidateFeatureIndex(feature, NumFeatures());
  return partial_grad_(params, feature);
}

Index Function::NumFunctions() const {
  RequireSlot(static_cast<bool>(num_functions_), "NumFunctions()");
  return num_functions_();
}

Index Function::NumFeatures() const {
  RequireSlot(static_cast<bool>(num_features_), "NumFeatures()");
  return num_features_();
}

void Function::Shuffle(std::uint64_t seed) {
  RequireSlot(static_cast<bool>(shuffle_), "Shuffle(seed)");
  shuffle_(seed);
}

double Function::TotalObjective(const ParameterVector& params) const {
  if (eval_full_) return Evaluate(params);
  return Evaluate(params, BatchRange{0, NumFunctions()});
}

}  // namespace optframe
