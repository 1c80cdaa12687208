#include "optframe/problems/logistic_regression.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

#include "optframe/errors.hpp"

namespace optframe::problems {

double StableSigmoid(double x) {
  if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

double StableLog1pExp(double x) {
  if (x > 0.0) return x + std::log1p(std::exp(-x));
  return std::log1p(std::exp(x));
}

LogisticRegression::LogisticRegression(Eigen::MatrixXd data, Eigen::VectorXd labels)
    : data_(std::move(data)), labels_(std::move(labels)) {
  if (data_.rows() < 1 || data_.cols() < 1) {
    throw InputError("logistic regression needs at least one point and one feature");
  }
  if (labels_.size() != data_.rows()) {
    throw InputError("label count does not match the number of data rows");
  }
  if (!data_.allFinite()) throw InputError("data matrix contains non-finite entries");
  for (Index i = 0; i < labels_.size(); ++i) {
    if (labels_[i] != 0.0 && labels_[i] != 1.0) {
      std::ostringstream msg;
      msg << "label at row " << i << " is " << labels_[i] << "; labels must be 0 or 1";
      throw InputError(msg.str());
    }
  }
  ordering_.resize(static_cast<std::size_t>(data_.rows()));
  std::iota(ordering_.begin(), ordering_.end(), Index{0});
}

CapabilitySet LogisticRegression::Capabilities() const {
  CapabilitySet caps;
  caps.batch_evaluate = true;
  caps.batch_gradient = true;
  caps.num_functions = true;
  caps.num_features = true;
  caps.shuffle = true;
  return caps;
}

double LogisticRegression::Margin(const ParameterVector& params, Index point) const {
  const Index d = data_.cols();
  return data_.row(point).dot(params.head(d)) + params[d];
}

double LogisticRegression::Evaluate(const ParameterVector& params, BatchRange range) const {
  detail::ValidateParameters(params, Dimension());
  detail::ValidateBatchRange(range, NumFunctions());
  double loss = 0.0;
  for (Index i = range.start; i < range.start + range.size; ++i) {
    const Index point = ordering_[static_cast<std::size_t>(i)];
    const double margin = Margin(params, point);
    loss += StableLog1pExp(margin) - labels_[point] * margin;
  }
  return loss;
}

Gradient LogisticRegression::Gradient(const ParameterVector& params, BatchRange range) const {
  detail::ValidateParameters(params, Dimension());
  detail::ValidateBatchRange(range, NumFunctions());
  const Index d = data_.cols();
  Eigen::VectorXd g = Eigen::VectorXd::Zero(Dimension());
  for (Index i = range.start; i < range.start + range.size; ++i) {
    const Index point = ordering_[static_cast<std::size_t>(i)];
    const double residual = StableSigmoid(Margin(params, point)) - labels_[point];
    g.head(d) += residual * data_.row(point).transpose();
    g[d] += residual;
  }
  return optframe::Gradient::Dense(std::move(g));
}

void LogisticRegression::Shuffle(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::shuffle(ordering_.begin(), ordering_.end(), rng);
}

LogisticRegression LoadLogisticRegressionCsv(const std::string& path, bool skip_header) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open CSV file: " + path);

  std::vector<std::vector<double>> rows;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (skip_header && line_number == 1) continue;
    if (line.empty()) continue;
    std::vector<double> row;
    std::stringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      try {
        std::size_t consumed = 0;
        const double value = std::stod(cell, &consumed);
        while (consumed < cell.size() && std::isspace(static_cast<unsigned char>(cell[consumed]))) {
          ++consumed;
        }
        if (consumed != cell.size()) throw std::invalid_argument(cell);
        row.push_back(value);
      } catch (const std::exception&) {
        std::ostringstream msg;
        msg << path << ":" << line_number << ": cannot parse '" << cell << "' as a number";
        throw InputError(msg.str());
      }
    }
    if (row.size() < 2) {
      std::ostringstream msg;
      msg << path << ":" << line_number << ": need at least one feature column and a label";
      throw InputError(msg.str());
    }
    if (!rows.empty() && rows.front().size() != row.size()) {
      std::ostringstream msg;
      msg << path << ":" << line_number << ": inconsistent column count";
      throw InputError(msg.str());
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw InputError(path + ": no data rows");

  const Index n = static_cast<Index>(rows.size());
  const Index d = static_cast<Index>(rows.front().size()) - 1;
  Eigen::MatrixXd data(n, d);
  Eigen::VectorXd labels(n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < d; ++j) data(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    labels[i] = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(d)];
  }
  return LogisticRegression(std::move(data), std::move(labels));
}

LogisticRegression MakeSyntheticLogisticRegression(Index points, Index features,
                                                   std::uint64_t seed) {
  if (points < 1 || features < 1) throw InputError("need at least one point and one feature");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uniform(-2.0, 2.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  // Fixed ground-truth model: alternating-sign unit weights, small bias.
  Eigen::VectorXd weights(features);
  for (Index j = 0; j < features; ++j) weights[j] = (j % 2 == 0) ? 1.0 : -1.0;
  const double bias = 0.25;

  Eigen::MatrixXd data(points, features);
  Eigen::VectorXd labels(points);
  for (Index i = 0; i < points; ++i) {
    for (Index j = 0; j < features; ++j) data(i, j) = uniform(rng);
    const double p = StableSigmoid(data.row(i).dot(weights) + bias);
    labels[i] = unit(rng) < p ? 1.0 : 0.0;
  }
  return LogisticRegression(std::move(data), std::move(labels));
}

}  // namespace optframe::problems
