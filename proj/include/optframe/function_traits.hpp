#pragma once

#include <concepts>
#include <cstdint>

#include "optframe/types.hpp"

// Compile-time detection of the objective-function contract. Each concept
// probes for one contract method; the adapter-aware concepts below mirror the
// runtime capability check so that a mismatch between an optimizer and a
// statically typed objective fails compilation with the missing method named
// in the static_assert message.

namespace optframe::traits {

template <typename F>
concept HasDimension = requires(const F& f) {
  { f.Dimension() } -> std::convertible_to<Index>;
};

template <typename F>
concept HasFullEvaluate = requires(F& f, const ParameterVector& x) {
  { f.Evaluate(x) } -> std::convertible_to<double>;
};

template <typename F>
concept HasBatchEvaluate = requires(F& f, const ParameterVector& x, BatchRange r) {
  { f.Evaluate(x, r) } -> std::convertible_to<double>;
};

template <typename F>
concept HasFullGradient = requires(F& f, const ParameterVector& x) {
  { f.Gradient(x) } -> std::convertible_to<Gradient>;
};

template <typename F>
concept HasBatchGradient = requires(F& f, const ParameterVector& x, BatchRange r) {
  { f.Gradient(x, r) } -> std::convertible_to<Gradient>;
};

template <typename F>
concept HasPartialGradient = requires(F& f, const ParameterVector& x, Index j) {
  { f.PartialGradient(x, j) } -> std::convertible_to<Gradient>;
};

template <typename F>
concept HasNumFunctions = requires(F& f) {
  { f.NumFunctions() } -> std::convertible_to<Index>;
};

template <typename F>
concept HasNumFeatures = requires(F& f) {
  { f.NumFeatures() } -> std::convertible_to<Index>;
};

template <typename F>
concept HasShuffle = requires(F& f, std::uint64_t seed) { f.Shuffle(seed); };

template <typename F>
concept HasCapabilities = requires(const F& f) {
  { f.Capabilities() } -> std::convertible_to<CapabilitySet>;
};

// Adapter-aware forms: a full-interface method is reachable either directly
// or through the separable<->non-separable adapters.

template <typename F>
concept FullyEvaluatable =
    HasFullEvaluate<F> || (HasBatchEvaluate<F> && HasNumFunctions<F>);

template <typename F>
concept FullyDifferentiable =
    HasFullGradient<F> || (HasBatchGradient<F> && HasNumFunctions<F>);

template <typename F>
concept BatchEvaluatable = HasBatchEvaluate<F> || HasFullEvaluate<F>;

template <typename F>
concept BatchDifferentiable =
    HasBatchGradient<F> || (HasFullGradient<F> && HasFullEvaluate<F>);

template <typename F>
concept CoordinateDifferentiable = HasPartialGradient<F> && HasNumFeatures<F>;

// The statically detectable capability set of F. The sparse_gradient flag is
// a runtime property of the returned Gradient values and is never detected.
template <typename F>
CapabilitySet DetectCapabilities() {
  CapabilitySet caps;
  caps.full_evaluate = HasFullEvaluate<F>;
  caps.batch_evaluate = HasBatchEvaluate<F>;
  caps.full_gradient = HasFullGradient<F>;
  caps.batch_gradient = HasBatchGradient<F>;
  caps.partial_gradient = HasPartialGradient<F>;
  caps.num_functions = HasNumFunctions<F>;
  caps.num_features = HasNumFeatures<F>;
  caps.shuffle = HasShuffle<F>;
  return caps;
}

}  // namespace optframe::traits
