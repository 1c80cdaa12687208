#include "optframe/problems/four_quadratics.hpp"

#include <algorithm>
#include <random>
#include <vector>

namespace optframe::problems {

FourQuadratics::FourQuadratics() {
  intercepts_ << 20.0, 12.0, 15.0, 100.0;
  coefficients_ << -4.0, -2.0, -3.0, -8.0;
  ordering_ = {0, 1, 2, 3};
}

CapabilitySet FourQuadratics::Capabilities() const {
  CapabilitySet caps;
  caps.batch_evaluate = true;
  caps.batch_gradient = true;
  caps.partial_gradient = true;
  caps.num_functions = true;
  caps.num_features = true;
  caps.shuffle = true;
  caps.sparse_gradient = true;
  return caps;
}

double FourQuadratics::Evaluate(const ParameterVector& params, BatchRange range) const {
  detail::ValidateParameters(params, Dimension());
  detail::ValidateBatchRange(range, NumFunctions());
  double cost = 0.0;
  for (Index i = range.start; i < range.start + range.size; ++i) {
    const Index k = ordering_[static_cast<std::size_t>(i)];
    cost += params[k] * params[k] + coefficients_[k] * params[k] + intercepts_[k];
  }
  return cost;
}

Gradient FourQuadratics::Gradient(const ParameterVector& params, BatchRange range) const {
  detail::ValidateParameters(params, Dimension());
  detail::ValidateBatchRange(range, NumFunctions());
  // Each component touches exactly one coordinate; collect the touched set in
  // index order to keep the sparse representation sorted.
  std::array<bool, 4> touched = {false, false, false, false};
  std::array<double, 4> values = {0.0, 0.0, 0.0, 0.0};
  for (Index i = range.start; i < range.start + range.size; ++i) {
    const Index k = ordering_[static_cast<std::size_t>(i)];
    touched[static_cast<std::size_t>(k)] = true;
    values[static_cast<std::size_t>(k)] += 2.0 * params[k] + coefficients_[k];
  }
  std::vector<SparseEntry> entries;
  for (Index k = 0; k < 4; ++k) {
    if (touched[static_cast<std::size_t>(k)]) {
      entries.push_back({k, values[static_cast<std::size_t>(k)]});
    }
  }
  return optframe::Gradient::Sparse(Dimension(), std::move(entries));
}

Gradient FourQuadratics::PartialGradient(const ParameterVector& params, Index feature) const {
  detail::ValidateParameters(params, Dimension());
  detail::ValidateFeatureIndex(feature, NumFeatures());
  return optframe::Gradient::Sparse(
      Dimension(), {{feature, 2.0 * params[feature] + coefficients_[feature]}});
}

void FourQuadratics::Shuffle(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::shuffle(ordering_.begin(), ordering_.end(), rng);
}

}  // namespace optframe::problems
