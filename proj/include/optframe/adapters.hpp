#pragma once

#include <string>
#include <string_view>

#include "optframe/function.hpp"

namespace optframe {

// Exposes the full (non-separable) interface of a separable objective:
// Evaluate(x) becomes Evaluate(x, [0, N)) and, when a batch gradient exists,
// Gradient(x) becomes Gradient(x, [0, N)). Existing methods are preserved.
// Throws CapabilityError when the batch evaluate form is missing.
Function AdaptSeparableToFull(const Function& f);

// Exposes the separable interface of a full-interface objective as a single
// component: NumFunctions() = 1, Evaluate(x, (0, 1)) = Evaluate(x), Shuffle a
// no-op. Batch requests other than (0, 1) are contract violations. When the
// objective already has a native batch form, that form is kept as-is.
// Throws CapabilityError when the full evaluate form is missing.
Function AdaptFullToSeparable(const Function& f);

struct CapabilityCheckResult {
  bool ok = false;
  std::string diagnostic;  // empty when ok
};

// The capabilities reachable from `available` through the two adapters above,
// iterated to a fixed point.
CapabilitySet AdapterClosure(const CapabilitySet& available);

// Verifies that every required capability is available directly or through an
// adapter path. On failure the diagnostic names the consumer (optimizer), the
// missing method(s), and the expected signature in prose.
CapabilityCheckResult CheckCapabilities(const CapabilitySet& available,
                                        const CapabilitySet& required,
                                        std::string_view consumer = "optimizer");

// Checks capabilities and returns a view of `f` with the required interface
// materialized through adapters where needed. Throws CapabilityError with the
// CheckCapabilities diagnostic when the requirement cannot be met. No
// objective evaluation is performed.
Function PrepareFor(const Function& f, const CapabilitySet& required,
                    std::string_view consumer);

}  // namespace optframe
