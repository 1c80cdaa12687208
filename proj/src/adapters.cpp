#include "optframe/adapters.hpp"

#include <sstream>
#include <vector>

namespace optframe {

Function AdaptSeparableToFull(const Function& f) {
  const CapabilitySet& caps = f.Capabilities();
  if (!caps.batch_evaluate || !caps.num_functions) {
    throw CapabilityError(
        "cannot adapt to the full interface: the objective function does not provide "
        "Evaluate(x, range) together with NumFunctions()");
  }
  if (caps.full_evaluate && (caps.full_gradient || !caps.batch_gradient)) return f;

  Function out = f;
  if (!out.eval_full_) {
    auto batch = f.eval_batch_;
    auto num = f.num_functions_;
    out.eval_full_ = [batch, num](const ParameterVector& x) {
      return batch(x, BatchRange{0, num()});
    };
    out.caps_.full_evaluate = true;
  }
  if (!out.grad_full_ && f.grad_batch_) {
    auto batch = f.grad_batch_;
    auto num = f.num_functions_;
    out.grad_full_ = [batch, num](const ParameterVector& x) {
      return batch(x, BatchRange{0, num()});
    };
    out.caps_.full_gradient = true;
  }
  return out;
}

Function AdaptFullToSeparable(const Function& f) {
  const CapabilitySet& caps = f.Capabilities();
  if (!caps.full_evaluate) {
    throw CapabilityError(
        "cannot adapt to the separable interface: the objective function does not provide "
        "Evaluate(x)");
  }
  if (caps.batch_evaluate) return f;  // already separable; keep the native form

  Function out = f;
  auto full = f.eval_full_;
  out.eval_batch_ = [full](const ParameterVector& x, BatchRange) {
    // Range validation upstream restricts requests to (0, 1).
    return full(x);
  };
  out.num_functions_ = []() { return Index{1}; };
  out.shuffle_ = [](std::uint64_t) {};  // one part; nothing to reorder
  out.caps_.batch_evaluate = true;
  out.caps_.num_functions = true;
  out.caps_.shuffle = true;
  if (f.grad_full_) {
    auto grad = f.grad_full_;
    out.grad_batch_ = [grad](const ParameterVector& x, BatchRange) { return grad(x); };
    out.caps_.batch_gradient = true;
  }
  return out;
}

CapabilitySet AdapterClosure(const CapabilitySet& available) {
  CapabilitySet c = available;
  for (int pass = 0; pass < 2; ++pass) {
    if (c.batch_evaluate && c.num_functions) c.full_evaluate = true;
    if (c.batch_gradient && c.batch_evaluate && c.num_functions) c.full_gradient = true;
    if (c.full_evaluate) {
      c.batch_evaluate = true;
      c.num_functions = true;
      c.shuffle = true;
      if (c.full_gradient) c.batch_gradient = true;
    }
  }
  return c;
}

namespace {

struct MissingMethod {
  const char* name;
  const char* expected;
};

std::vector<MissingMethod> MissingMethods(const CapabilitySet& reachable,
                                          const CapabilitySet& required) {
  std::vector<MissingMethod> missing;
  if ((required.full_evaluate && !reachable.full_evaluate) ||
      (required.batch_evaluate && !reachable.batch_evaluate)) {
    missing.push_back(
        {"Evaluate()",
         "double Evaluate(const ParameterVector& x) or "
         "double Evaluate(const ParameterVector& x, BatchRange range) with NumFunctions()"});
  }
  if ((required.full_gradient && !reachable.full_gradient) ||
      (required.batch_gradient && !reachable.batch_gradient)) {
    missing.push_back(
        {"Gradient()",
         "Gradient Gradient(const ParameterVector& x) or "
         "Gradient Gradient(const ParameterVector& x, BatchRange range) with NumFunctions()"});
  }
  if (required.partial_gradient && !reachable.partial_gradient) {
    missing.push_back(
        {"PartialGradient()", "Gradient PartialGradient(const ParameterVector& x, Index j)"});
  }
  if (required.num_functions && !reachable.num_functions) {
    missing.push_back({"NumFunctions()", "Index NumFunctions()"});
  }
  if (required.num_features && !reachable.num_features) {
    missing.push_back({"NumFeatures()", "Index NumFeatures()"});
  }
  if (required.shuffle && !reachable.shuffle) {
    missing.push_back({"Shuffle()", "void Shuffle(std::uint64_t seed)"});
  }
  if (required.sparse_gradient && !reachable.sparse_gradient) {
    missing.push_back({"sparse Gradient()", "Gradient values in the sparse representation"});
  }
  return missing;
}

}  // namespace

CapabilityCheckResult CheckCapabilities(const CapabilitySet& available,
                                        const CapabilitySet& required,
                                        std::string_view consumer) {
  const CapabilitySet reachable = AdapterClosure(available);
  const std::vector<MissingMethod> missing = MissingMethods(reachable, required);
  if (missing.empty()) return {true, ""};

  std::ostringstream msg;
  msg << consumer << ": the objective function type does not provide a usable ";
  for (std::size_t i = 0; i < missing.size(); ++i) {
    if (i > 0) msg << (i + 1 == missing.size() ? " or " : ", ");
    msg << missing[i].name;
  }
  msg << " method (expected ";
  for (std::size_t i = 0; i < missing.size(); ++i) {
    if (i > 0) msg << "; ";
    msg << missing[i].expected;
  }
  msg << "). Available capabilities: " << available.Describe() << ".";
  return {false, msg.str()};
}

Function PrepareFor(const Function& f, const CapabilitySet& required,
                    std::string_view consumer) {
  const CapabilityCheckResult check = CheckCapabilities(f.Capabilities(), required, consumer);
  if (!check.ok) throw CapabilityError(check.diagnostic);

  Function prepared = f;
  const CapabilitySet& have = prepared.Capabilities();
  const bool needs_full = (required.full_evaluate && !have.full_evaluate) ||
                          (required.full_gradient && !have.full_gradient);
  if (needs_full) prepared = AdaptSeparableToFull(prepared);
  const CapabilitySet& have2 = prepared.Capabilities();
  const bool needs_batch = (required.batch_evaluate && !have2.batch_evaluate) ||
                           (required.batch_gradient && !have2.batch_gradient) ||
                           (required.num_functions && !have2.num_functions) ||
                           (required.shuffle && !have2.shuffle);
  if (needs_batch) prepared = AdaptFullToSeparable(prepared);
  return prepared;
}

}  // namespace optframe
