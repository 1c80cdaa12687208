#include "optframe/problems/sphere.hpp"

#include "optframe/errors.hpp"

namespace optframe::problems {

Sphere::Sphere(Index dimension) : dimension_(dimension) {
  if (dimension < 1) throw InputError("sphere dimension must be >= 1");
}

CapabilitySet Sphere::Capabilities() const {
  CapabilitySet caps;
  caps.full_evaluate = true;
  caps.full_gradient = true;
  caps.partial_gradient = true;
  caps.num_features = true;
  caps.sparse_gradient = true;
  return caps;
}

double Sphere::Evaluate(const ParameterVector& params) const {
  detail::ValidateParameters(params, dimension_);
  return params.squaredNorm();
}

Gradient Sphere::Gradient(const ParameterVector& params) const {
  detail::ValidateParameters(params, dimension_);
  return optframe::Gradient::Dense(2.0 * params);
}

Gradient Sphere::PartialGradient(const ParameterVector& params, Index feature) const {
  detail::ValidateParameters(params, dimension_);
  detail::ValidateFeatureIndex(feature, dimension_);
  return optframe::Gradient::Sparse(dimension_, {{feature, 2.0 * params[feature]}});
}

CapabilitySet Rosenbrock::Capabilities() const {
  CapabilitySet caps;
  caps.full_evaluate = true;
  caps.full_gradient = true;
  return caps;
}

double Rosenbrock::Evaluate(const ParameterVector& params) const {
  detail::ValidateParameters(params, Dimension());
  const double x = params[0];
  const double y = params[1];
  return (1.0 - x) * (1.0 - x) + 100.0 * (y - x * x) * (y - x * x);
}

Gradient Rosenbrock::Gradient(const ParameterVector& params) const {
  detail::ValidateParameters(params, Dimension());
  const double x = params[0];
  const double y = params[1];
  Eigen::Vector2d g;
  g[0] = -2.0 * (1.0 - x) - 400.0 * x * (y - x * x);
  g[1] = 200.0 * (y - x * x);
  return optframe::Gradient::Dense(g);
}

AbsoluteDeviation::AbsoluteDeviation(ParameterVector target) : target_(std::move(target)) {
  if (target_.size() < 1) throw InputError("target must have dimension >= 1");
  if (!target_.allFinite()) throw InputError("target contains non-finite entries");
}

AbsoluteDeviation AbsoluteDeviation::WithConstantTarget(Index dimension, double value) {
  return AbsoluteDeviation(ParameterVector::Constant(dimension, value));
}

CapabilitySet AbsoluteDeviation::Capabilities() const {
  CapabilitySet caps;
  caps.full_evaluate = true;
  return caps;
}

double AbsoluteDeviation::Evaluate(const ParameterVector& params) const {
  detail::ValidateParameters(params, Dimension());
  return (params - target_).cwiseAbs().sum();
}

}  // namespace optframe::problems
