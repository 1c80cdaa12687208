#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "optframe/errors.hpp"

namespace optframe {

using Index = Eigen::Index;

// The optimization variable: a dense column of 64-bit reals. Its length is
// fixed for the lifetime of one optimization run.
using ParameterVector = Eigen::VectorXd;

// A window of component functions of a separable objective:
// [start, start + size). Validated against NumFunctions() wherever it is used.
struct BatchRange {
  Index start = 0;
  Index size = 1;

  friend bool operator==(const BatchRange&, const BatchRange&) = default;
};

struct SparseEntry {
  Index index = 0;
  double value = 0.0;

  friend bool operator==(const SparseEntry&, const SparseEntry&) = default;
};

// A gradient of dimension d, stored either densely or as a sorted list of
// (index, value) pairs with strictly increasing, unique indices in [0, d).
class Gradient {
 public:
  Gradient() = default;

  static Gradient Dense(Eigen::VectorXd values);
  static Gradient Zero(Index dimension);

  // Entries must be sorted by strictly increasing index; indices in [0, d).
  static Gradient Sparse(Index dimension, std::vector<SparseEntry> entries);

  // Builds the sparse form of a dense gradient, dropping exact zeros.
  static Gradient Sparsify(const Eigen::VectorXd& dense);

  bool IsSparse() const { return sparse_; }
  Index Dimension() const { return dimension_; }

  // Densifies; the result always has exactly Dimension() entries.
  Eigen::VectorXd ToDense() const;

  // Sparse entries; throws ContractViolation on a dense gradient.
  const std::vector<SparseEntry>& Entries() const;

  double Norm() const;
  bool AllFinite() const;

 private:
  bool sparse_ = false;
  Index dimension_ = 0;
  Eigen::VectorXd dense_;
  std::vector<SparseEntry> entries_;
};

// Flags recording which contract methods an objective function provides.
struct CapabilitySet {
  bool full_evaluate = false;    // double Evaluate(x)
  bool batch_evaluate = false;   // double Evaluate(x, range)
  bool full_gradient = false;    // Gradient(x)
  bool batch_gradient = false;   // Gradient(x, range)
  bool partial_gradient = false; // PartialGradient(x, j)
  bool num_functions = false;    // NumFunctions()
  bool num_features = false;     // NumFeatures()
  bool shuffle = false;          // Shuffle(seed)
  bool sparse_gradient = false;  // gradients may come back sparse

  bool Contains(const CapabilitySet& required) const;

  // Internal-consistency violations of the set itself (a separable function
  // must report its part count, batch gradients require batch evaluation,
  // partial gradients require a feature count). Empty when consistent.
  std::vector<std::string> InvariantViolations() const;

  // Human-readable list of the methods behind the set bits, e.g.
  // "Evaluate(x, range), Gradient(x, range), NumFunctions(), Shuffle(seed)".
  std::string Describe() const;

  friend bool operator==(const CapabilitySet&, const CapabilitySet&) = default;
};

namespace detail {

// Shared precondition checks used by problems and the type-erased wrapper.
void ValidateBatchRange(const BatchRange& range, Index num_functions);
void ValidateFeatureIndex(Index feature, Index num_features);
void ValidateParameters(const ParameterVector& params, Index dimension);

}  // namespace detail

}  // namespace optframe
