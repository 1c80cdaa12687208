#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "optframe/types.hpp"

namespace optframe::problems {

// Binary logistic regression under the (unregularized) negative
// log-likelihood of the sigmoid model, one component function per data point:
//   f(theta) = sum_i [ log(1 + exp(m_i)) - y_i m_i ],  m_i = w . x_i + b,
// with theta = (w_1..w_d, b). Labels are in {0, 1}. The margin terms are
// computed in branch form so large |m_i| never overflows exp().
class LogisticRegression {
 public:
  // data: n x d feature matrix (one row per point); labels: n entries in {0, 1}.
  LogisticRegression(Eigen::MatrixXd data, Eigen::VectorXd labels);

  Index Dimension() const { return data_.cols() + 1; }  // weights + bias
  Index NumFunctions() const { return data_.rows(); }
  Index NumFeatures() const { return Dimension(); }
  CapabilitySet Capabilities() const;

  double Evaluate(const ParameterVector& params, BatchRange range) const;
  optframe::Gradient Gradient(const ParameterVector& params, BatchRange range) const;
  void Shuffle(std::uint64_t seed);

 private:
  double Margin(const ParameterVector& params, Index point) const;

  Eigen::MatrixXd data_;
  Eigen::VectorXd labels_;
  std::vector<Index> ordering_;
};

// Numerically stable sigmoid and log(1 + exp(x)).
double StableSigmoid(double x);
double StableLog1pExp(double x);

// Reads "f1,f2,...,fd,label" rows: the first d columns are features, the last
// column is the {0, 1} label. When `skip_header` is set the first line is
// dropped. Throws InputError on malformed rows, non-finite values, or labels
// outside {0, 1}.
LogisticRegression LoadLogisticRegressionCsv(const std::string& path, bool skip_header = false);

// Seeded synthetic dataset: features uniform in [-2, 2], labels drawn from a
// fixed ground-truth sigmoid model.
LogisticRegression MakeSyntheticLogisticRegression(Index points, Index features,
                                                   std::uint64_t seed);

}  // namespace optframe::problems
