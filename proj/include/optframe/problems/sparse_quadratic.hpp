#pragma once

#include <cstdint>
#include <vector>

#include "optframe/types.hpp"

namespace optframe::problems {

// Separable quadratic with sparse per-component gradients,
//   f(x) = sum_j a_j x_j^2,  a_j > 0,
// split into d components where component i covers the k coordinates
// {i, i+1, ..., i+k-1} (mod d) with weight a_j / k each. Every component
// gradient therefore touches exactly k coordinates.
class SparseQuadratic {
 public:
  SparseQuadratic(Eigen::VectorXd coefficients, Index active_set_size);

  Index Dimension() const { return coefficients_.size(); }
  Index NumFunctions() const { return coefficients_.size(); }
  Index ActiveSetSize() const { return active_set_size_; }
  CapabilitySet Capabilities() const;

  double Evaluate(const ParameterVector& params, BatchRange range) const;
  optframe::Gradient Gradient(const ParameterVector& params, BatchRange range) const;
  void Shuffle(std::uint64_t seed);

 private:
  Eigen::VectorXd coefficients_;
  Index active_set_size_;
  std::vector<Index> ordering_;
};

}  // namespace optframe::problems
