#include "optframe/problems/sparse_quadratic.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "optframe/errors.hpp"

namespace optframe::problems {

SparseQuadratic::SparseQuadratic(Eigen::VectorXd coefficients, Index active_set_size)
    : coefficients_(std::move(coefficients)), active_set_size_(active_set_size) {
  if (coefficients_.size() < 1) throw InputError("coefficient vector must be non-empty");
  if ((coefficients_.array() <= 0.0).any() || !coefficients_.allFinite()) {
    throw InputError("coefficients must be positive and finite");
  }
  if (active_set_size_ < 1 || active_set_size_ > coefficients_.size()) {
    throw InputError("active set size must lie in [1, dimension]");
  }
  ordering_.resize(static_cast<std::size_t>(coefficients_.size()));
  std::iota(ordering_.begin(), ordering_.end(), Index{0});
}

CapabilitySet SparseQuadratic::Capabilities() const {
  CapabilitySet caps;
  caps.batch_evaluate = true;
  caps.batch_gradient = true;
  caps.num_functions = true;
  caps.shuffle = true;
  caps.sparse_gradient = true;
  return caps;
}

double SparseQuadratic::Evaluate(const ParameterVector& params, BatchRange range) const {
  detail::ValidateParameters(params, Dimension());
  detail::ValidateBatchRange(range, NumFunctions());
  const Index d = Dimension();
  double cost = 0.0;
  for (Index i = range.start; i < range.start + range.size; ++i) {
    const Index component = ordering_[static_cast<std::size_t>(i)];
    for (Index t = 0; t < active_set_size_; ++t) {
      const Index j = (component + t) % d;
      cost += coefficients_[j] / static_cast<double>(active_set_size_) * params[j] * params[j];
    }
  }
  return cost;
}

Gradient SparseQuadratic::Gradient(const ParameterVector& params, BatchRange range) const {
  detail::ValidateParameters(params, Dimension());
  detail::ValidateBatchRange(range, NumFunctions());
  const Index d = Dimension();
  std::map<Index, double> accumulated;
  for (Index i = range.start; i < range.start + range.size; ++i) {
    const Index component = ordering_[static_cast<std::size_t>(i)];
    for (Index t = 0; t < active_set_size_; ++t) {
      const Index j = (component + t) % d;
      accumulated[j] +=
          2.0 * coefficients_[j] / static_cast<double>(active_set_size_) * params[j];
    }
  }
  std::vector<SparseEntry> entries;
  entries.reserve(accumulated.size());
  for (const auto& [index, value] : accumulated) entries.push_back({index, value});
  return optframe::Gradient::Sparse(d, std::move(entries));
}

void SparseQuadratic::Shuffle(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::shuffle(ordering_.begin(), ordering_.end(), rng);
}

}  // namespace optframe::problems
