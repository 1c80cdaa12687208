#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "optframe/errors.hpp"
#include "optframe/types.hpp"

namespace optframe {

// Pluggable per-step update rules for the SGD-family optimizers. Each policy
// owns its per-run state (accumulators, moment estimates, step counter) and
// transforms one gradient into one parameter step.
enum class PolicyId {
  kVanilla,
  kMomentum,
  kAdaGrad,
  kAdaDelta,
  kRmsProp,
  kAdam,
  kAdaMax,
  kSmorms3,
};

std::string_view ToString(PolicyId id);
std::optional<PolicyId> PolicyIdFromString(std::string_view name);
const std::vector<PolicyId>& AllPolicies();

struct PolicyOptions {
  double momentum = 0.9;  // momentum policy: velocity retention in [0, 1)
  double rho = 0.95;      // adadelta: averaging rate in (0, 1)
  double decay = 0.99;    // rmsprop: averaging rate in (0, 1)
  double beta1 = 0.9;     // adam/adamax: first-moment rate in (0, 1)
  double beta2 = 0.999;   // adam/adamax: second-moment rate in (0, 1)
  // Smoothing term; when unset each policy uses its customary default
  // (1e-8 for adagrad/rmsprop/adam/adamax, 1e-6 for adadelta, 1e-16 for
  // smorms3).
  std::optional<double> epsilon;
};

class UpdatePolicy {
 public:
  virtual ~UpdatePolicy() = default;

  UpdatePolicy(const UpdatePolicy&) = delete;
  UpdatePolicy& operator=(const UpdatePolicy&) = delete;

  PolicyId Id() const { return id_; }
  Index Dimension() const { return dimension_; }
  std::int64_t StepCount() const { return step_count_; }
  std::int64_t RejectedSteps() const { return rejected_steps_; }
  const std::vector<std::string>& Warnings() const { return warnings_; }

  // Returns the updated parameters. A gradient with non-finite entries
  // rejects the step: the parameters come back unchanged, the step counter
  // still advances, and a warning is recorded.
  ParameterVector Apply(const ParameterVector& params, double step_size,
                        const Gradient& gradient);

  // Snapshot of the policy's accumulator vectors (moment estimates, squared
  // sums); all zero right after construction.
  virtual std::vector<Eigen::VectorXd> Accumulators() const { return {}; }

 protected:
  UpdatePolicy(PolicyId id, Index dimension) : id_(id), dimension_(dimension) {}

  // `g` is the densified gradient; StepCount() has already advanced, so the
  // first call sees step t = 1 (used for bias correction).
  virtual ParameterVector DoApply(const ParameterVector& params, double step_size,
                                  const Eigen::VectorXd& g) = 0;

  std::int64_t step_count_ = 0;

 private:
  PolicyId id_;
  Index dimension_;
  std::int64_t rejected_steps_ = 0;
  std::vector<std::string> warnings_;
};

// Validates the hyperparameters and returns a fresh policy state with zeroed
// accumulators. Throws ConfigError naming any out-of-range parameter.
std::unique_ptr<UpdatePolicy> MakeUpdatePolicy(PolicyId id, Index dimension,
                                               const PolicyOptions& options = {});

}  // namespace optframe
