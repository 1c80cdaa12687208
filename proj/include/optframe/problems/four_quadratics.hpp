#pragma once

#include <array>
#include <cstdint>

#include "optframe/types.hpp"

namespace optframe::problems {

// Separable objective of four independent parabolas,
//   f(x) = sum_i (x_i^2 + b_i x_i + c_i),
// with c = (20, 12, 15, 100) and b = (-4, -2, -3, -8). The minimum value is
// 123.75 at x* = (2, 1, 1.5, 4). Component functions are visited through an
// internal ordering permutation that Shuffle() resamples; the problem exposes
// only the separable interface plus per-coordinate partial gradients, making
// it the canonical exercise for batch optimizers and adapters.
class FourQuadratics {
 public:
  FourQuadratics();

  Index Dimension() const { return 4; }
  Index NumFunctions() const { return 4; }
  Index NumFeatures() const { return 4; }
  CapabilitySet Capabilities() const;

  double Evaluate(const ParameterVector& params, BatchRange range) const;
  optframe::Gradient Gradient(const ParameterVector& params, BatchRange range) const;
  optframe::Gradient PartialGradient(const ParameterVector& params, Index feature) const;
  void Shuffle(std::uint64_t seed);

  const std::array<Index, 4>& Ordering() const { return ordering_; }

  static constexpr double kMinimumObjective = 123.75;

 private:
  Eigen::Vector4d intercepts_;
  Eigen::Vector4d coefficients_;
  std::array<Index, 4> ordering_;
};

}  // namespace optframe::problems
