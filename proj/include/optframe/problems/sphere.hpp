#pragma once

#include "optframe/types.hpp"

namespace optframe::problems {

// f(x) = sum_i x_i^2: convex, minimum 0 at the origin. Full interface plus
// per-coordinate partial gradients.
class Sphere {
 public:
  explicit Sphere(Index dimension);

  Index Dimension() const { return dimension_; }
  Index NumFeatures() const { return dimension_; }
  CapabilitySet Capabilities() const;

  double Evaluate(const ParameterVector& params) const;
  optframe::Gradient Gradient(const ParameterVector& params) const;
  optframe::Gradient PartialGradient(const ParameterVector& params, Index feature) const;

 private:
  Index dimension_;
};

// f(x, y) = (1 - x)^2 + 100 (y - x^2)^2: the classical nonconvex benchmark,
// minimum 0 at (1, 1). Full interface only.
class Rosenbrock {
 public:
  Index Dimension() const { return 2; }
  CapabilitySet Capabilities() const;

  double Evaluate(const ParameterVector& params) const;
  optframe::Gradient Gradient(const ParameterVector& params) const;
};

// f(x) = sum_i |x_i - target_i|: evaluate-only (the gradient is undefined at
// the kinks), exercising the arbitrary-function path and capability
// rejection.
class AbsoluteDeviation {
 public:
  explicit AbsoluteDeviation(ParameterVector target);
  static AbsoluteDeviation WithConstantTarget(Index dimension, double value = 0.5);

  Index Dimension() const { return target_.size(); }
  CapabilitySet Capabilities() const;

  double Evaluate(const ParameterVector& params) const;

 private:
  ParameterVector target_;
};

}  // namespace optframe::problems
