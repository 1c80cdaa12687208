#pragma once

#include <chrono>

#include "optframe/adapters.hpp"
#include "optframe/function.hpp"
#include "optframe/result.hpp"

namespace optframe::detail {

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double Seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

// Evaluates the starting point and rejects non-finite initial objectives.
inline double InitialObjective(const Function& f, const ParameterVector& x0) {
  const double value = f.TotalObjective(x0);
  if (!std::isfinite(value)) {
    throw ContractViolation("objective is not finite at the initial point");
  }
  return value;
}

}  // namespace optframe::detail
