#include "optframe/types.hpp"

#include <cmath>
#include <sstream>

namespace optframe {

Gradient Gradient::Dense(Eigen::VectorXd values) {
  Gradient g;
  g.sparse_ = false;
  g.dimension_ = values.size();
  g.dense_ = std::move(values);
  return g;
}

Gradient Gradient::Zero(Index dimension) {
  return Dense(Eigen::VectorXd::Zero(dimension));
}

Gradient Gradient::Sparse(Index dimension, std::vector<SparseEntry> entries) {
  Index previous = -1;
  for (const SparseEntry& entry : entries) {
    if (entry.index <= previous || entry.index >= dimension) {
      std::ostringstream msg;
      msg << "sparse gradient entries must have strictly increasing indices in [0, "
          << dimension << "); saw index " << entry.index << " after " << previous;
      throw ContractViolation(msg.str());
    }
    previous = entry.index;
  }
  Gradient g;
  g.sparse_ = true;
  g.dimension_ = dimension;
  g.entries_ = std::move(entries);
  return g;
}

Gradient Gradient::Sparsify(const Eigen::VectorXd& dense) {
  std::vector<SparseEntry> entries;
  for (Index i = 0; i < dense.size(); ++i) {
    if (dense[i] != 0.0) entries.push_back({i, dense[i]});
  }
  return Sparse(dense.size(), std::move(entries));
}

Eigen::VectorXd Gradient::ToDense() const {
  if (!sparse_) return dense_;
  Eigen::VectorXd out = Eigen::VectorXd::Zero(dimension_);
  for (const SparseEntry& entry : entries_) out[entry.index] = entry.value;
  return out;
}

const std::vector<SparseEntry>& Gradient::Entries() const {
  if (!sparse_) {
    throw ContractViolation("Entries() is only available on sparse gradients");
  }
  return entries_;
}

double Gradient::Norm() const {
  if (!sparse_) return dense_.norm();
  double sum = 0.0;
  for (const SparseEntry& entry : entries_) sum += entry.value * entry.value;
  return std::sqrt(sum);
}

bool Gradient::AllFinite() const {
  if (!sparse_) return dense_.allFinite();
  for (const SparseEntry& entry : entries_) {
    if (!std::isfinite(entry.value)) return false;
  }
  return true;
}

bool CapabilitySet::Contains(const CapabilitySet& required) const {
  return (!required.full_evaluate || full_evaluate) &&
         (!required.batch_evaluate || batch_evaluate) &&
         (!required.full_gradient || full_gradient) &&
         (!required.batch_gradient || batch_gradient) &&
         (!required.partial_gradient || partial_gradient) &&
         (!required.num_functions || num_functions) &&
         (!required.num_features || num_features) &&
         (!required.shuffle || shuffle) &&
         (!required.sparse_gradient || sparse_gradient);
}

std::vector<std::string> CapabilitySet::InvariantViolations() const {
  std::vector<std::string> out;
  if (batch_evaluate && !num_functions) {
    out.push_back("batch Evaluate requires NumFunctions()");
  }
  if (batch_gradient && !batch_evaluate) {
    out.push_back("batch Gradient requires batch Evaluate");
  }
  if (partial_gradient && !num_features) {
    out.push_back("PartialGradient requires NumFeatures()");
  }
  return out;
}

std::string CapabilitySet::Describe() const {
  std::vector<std::string> parts;
  if (full_evaluate) parts.push_back("Evaluate(x)");
  if (batch_evaluate) parts.push_back("Evaluate(x, range)");
  if (full_gradient) parts.push_back("Gradient(x)");
  if (batch_gradient) parts.push_back("Gradient(x, range)");
  if (partial_gradient) parts.push_back("PartialGradient(x, j)");
  if (num_functions) parts.push_back("NumFunctions()");
  if (num_features) parts.push_back("NumFeatures()");
  if (shuffle) parts.push_back("Shuffle(seed)");
  if (sparse_gradient) parts.push_back("sparse gradients");
  if (parts.empty()) return "(none)";
  std::string joined;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) joined += ", ";
    joined += parts[i];
  }
  return joined;
}

namespace detail {

void ValidateBatchRange(const BatchRange& range, Index num_functions) {
  if (range.start < 0 || range.size < 1 || range.start >= num_functions ||
      range.start + range.size > num_functions) {
    std::ostringstream msg;
    msg << "batch range [" << range.start << ", " << range.start + range.size
        << ") is invalid for a separable objective with " << num_functions
        << " component function(s)";
    throw ContractViolation(msg.str());
  }
}

void ValidateFeatureIndex(Index feature, Index num_features) {
  if (feature < 0 || feature >= num_features) {
    std::ostringstream msg;
    msg << "feature index " << feature << " is out of range [0, " << num_features << ")";
    throw ContractViolation(msg.str());
  }
}

void ValidateParameters(const ParameterVector& params, Index dimension) {
  if (params.size() != dimension) {
    std::ostringstream msg;
    msg << "parameter vector has dimension " << params.size() << ", expected " << dimension;
    throw ContractViolation(msg.str());
  }
  if (!params.allFinite()) {
    throw ContractViolation("parameter vector contains non-finite entries");
  }
}

}  // namespace detail

}  // namespace optframe
