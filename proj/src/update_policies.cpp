#include "optframe/update_policies.hpp"

#include <cmath>
#include <sstream>

namespace optframe {

std::string_view ToString(PolicyId id) {
  switch (id) {
    case PolicyId::kVanilla: return "vanilla";
    case PolicyId::kMomentum: return "momentum";
    case PolicyId::kAdaGrad: return "adagrad";
    case PolicyId::kAdaDelta: return "adadelta";
    case PolicyId::kRmsProp: return "rmsprop";
    case PolicyId::kAdam: return "adam";
    case PolicyId::kAdaMax: return "adamax";
    case PolicyId::kSmorms3: return "smorms3";
  }
  return "unknown";
}

const std::vector<PolicyId>& AllPolicies() {
  static const std::vector<PolicyId> all = {
      PolicyId::kVanilla, PolicyId::kMomentum, PolicyId::kAdaGrad, PolicyId::kAdaDelta,
      PolicyId::kRmsProp, PolicyId::kAdam,     PolicyId::kAdaMax,  PolicyId::kSmorms3};
  return all;
}

std::optional<PolicyId> PolicyIdFromString(std::string_view name) {
  for (PolicyId id : AllPolicies()) {
    if (ToString(id) == name) return id;
  }
  return std::nullopt;
}

ParameterVector UpdatePolicy::Apply(const ParameterVector& params, double step_size,
                                    const Gradient& gradient) {
  if (step_size <= 0.0 || !std::isfinite(step_size)) {
    throw ConfigError("step_size must be positive and finite");
  }
  detail::ValidateParameters(params, Dimension());
  if (gradient.Dimension() != Dimension()) {
    std::ostringstream msg;
    msg << "gradient has dimension " << gradient.Dimension() << ", expected " << Dimension();
    throw ContractViolation(msg.str());
  }
  ++step_count_;
  if (!gradient.AllFinite()) {
    ++rejected_steps_;
    if (warnings_.size() < 16) {
      warnings_.push_back("step " + std::to_string(step_count_) +
                          ": non-finite gradient, step rejected");
    }
    return params;
  }
  return DoApply(params, step_size, gradient.ToDense());
}

namespace {

using Eigen::ArrayXd;

void RequireOpenUnit(double value, const char* name) {
  if (!(value > 0.0 && value < 1.0)) {
    std::ostringstream msg;
    msg << name << " must lie in (0, 1); got " << value;
    throw ConfigError(msg.str());
  }
}

void RequirePositive(double value, const char* name) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    std::ostringstream msg;
    msg << name << " must be positive and finite; got " << value;
    throw ConfigError(msg.str());
  }
}

class VanillaPolicy final : public UpdatePolicy {
 public:
  explicit VanillaPolicy(Index d) : UpdatePolicy(PolicyId::kVanilla, d) {}

 protected:
  ParameterVector DoApply(const ParameterVector& params, double step_size,
                          const Eigen::VectorXd& g) override {
    return params - step_size * g;
  }
};

class MomentumPolicy final : public UpdatePolicy {
 public:
  MomentumPolicy(Index d, double momentum)
      : UpdatePolicy(PolicyId::kMomentum, d), momentum_(momentum), velocity_(ArrayXd::Zero(d)) {}

  std::vector<Eigen::VectorXd> Accumulators() const override { return {velocity_.matrix()}; }

 protected:
  ParameterVector DoApply(const ParameterVector& params, double step_size,
                          const Eigen::VectorXd& g) override {
    velocity_ = momentum_ * velocity_ + g.array();
    return (params.array() - step_size * velocity_).matrix();
  }

 private:
  double momentum_;
  ArrayXd velocity_;
};

// Accumulates squared gradients; the smoothing term sits inside the root, so
// the per-coordinate ratio |g| / sqrt(sum g^2 + eps) never exceeds 1.
class AdaGradPolicy final : public UpdatePolicy {
 public:
  AdaGradPolicy(Index d, double epsilon)
      : UpdatePolicy(PolicyId::kAdaGrad, d), epsilon_(epsilon), squared_sum_(ArrayXd::Zero(d)) {}

  std::vector<Eigen::VectorXd> Accumulators() const override { return {squared_sum_.matrix()}; }

 protected:
  ParameterVector DoApply(const ParameterVector& params, double step_size,
                          const Eigen::VectorXd& g) override {
    squared_sum_ += g.array().square();
    return (params.array() - step_size * g.array() / (squared_sum_ + epsilon_).sqrt()).matrix();
  }

 private:
  double epsilon_;
  ArrayXd squared_sum_;
};

// Decaying averages of squared gradients and squared steps; the step is the
// gradient rescaled by the ratio of the two running RMS values (smoothing
// inside both roots), then scaled by step_size.
class AdaDeltaPolicy final : public UpdatePolicy {
 public:
  AdaDeltaPolicy(Index d, double rho, double epsilon)
      : UpdatePolicy(PolicyId::kAdaDelta, d),
        rho_(rho),
        epsilon_(epsilon),
        mean_sq_grad_(ArrayXd::Zero(d)),
        mean_sq_step_(ArrayXd::Zero(d)) {}

  std::vector<Eigen::VectorXd> Accumulators() const override {
    return {mean_sq_grad_.matrix(), mean_sq_step_.matrix()};
  }

 protected:
  ParameterVector DoApply(const ParameterVector& params, double step_size,
                          const Eigen::VectorXd& g) override {
    mean_sq_grad_ = rho_ * mean_sq_grad_ + (1.0 - rho_) * g.array().square();
    const ArrayXd step =
        ((mean_sq_step_ + epsilon_) / (mean_sq_grad_ + epsilon_)).sqrt() * g.array();
    mean_sq_step_ = rho_ * mean_sq_step_ + (1.0 - rho_) * step.square();
    return (params.array() - step_size * step).matrix();
  }

 private:
  double rho_;
  double epsilon_;
  ArrayXd mean_sq_grad_;
  ArrayXd mean_sq_step_;
};

// Decaying average of squared gradients. The average is debiased by
// 1 - decay^t before the root so that early steps stay within the trust
// bound |step| <= step_size; the raw lecture-note form with a zeroed
// accumulator overshoots by 1/sqrt(1 - decay) on the first step.
class RmsPropPolicy final : public UpdatePolicy {
 public:
  RmsPropPolicy(Index d, double decay, double epsilon)
      : UpdatePolicy(PolicyId::kRmsProp, d),
        decay_(decay),
        epsilon_(epsilon),
        mean_sq_grad_(ArrayXd::Zero(d)) {}

  std::vector<Eigen::VectorXd> Accumulators() const override { return {mean_sq_grad_.matrix()}; }

 protected:
  ParameterVector DoApply(const ParameterVector& params, double step_size,
                          const Eigen::VectorXd& g) override {
    mean_sq_grad_ = decay_ * mean_sq_grad_ + (1.0 - decay_) * g.array().square();
    const double correction = 1.0 - std::pow(decay_, static_cast<double>(StepCount()));
    const ArrayXd debiased = mean_sq_grad_ / correction;
    return (params.array() - step_size * g.array() / (debiased.sqrt() + epsilon_)).matrix();
  }

 private:
  double decay_;
  double epsilon_;
  ArrayXd mean_sq_grad_;
};

// Bias-corrected first and second moment estimates; smoothing added outside
// the root.
class AdamPolicy final : public UpdatePolicy {
 public:
  AdamPolicy(Index d, double beta1, double beta2, double epsilon)
      : UpdatePolicy(PolicyId::kAdam, d),
        beta1_(beta1),
        beta2_(beta2),
        epsilon_(epsilon),
        first_moment_(ArrayXd::Zero(d)),
        second_moment_(ArrayXd::Zero(d)) {}

  std::vector<Eigen::VectorXd> Accumulators() const override {
    return {first_moment_.matrix(), second_moment_.matrix()};
  }

 protected:
  ParameterVector DoApply(const ParameterVector& params, double step_size,
                          const Eigen::VectorXd& g) override {
    const double t = static_cast<double>(StepCount());
    first_moment_ = beta1_ * first_moment_ + (1.0 - beta1_) * g.array();
    second_moment_ = beta2_ * second_moment_ + (1.0 - beta2_) * g.array().square();
    const ArrayXd m_hat = first_moment_ / (1.0 - std::pow(beta1_, t));
    const ArrayXd v_hat = second_moment_ / (1.0 - std::pow(beta2_, t));
    return (params.array() - step_size * m_hat / (v_hat.sqrt() + epsilon_)).matrix();
  }

 private:
  double beta1_;
  double beta2_;
  double epsilon_;
  ArrayXd first_moment_;
  ArrayXd second_moment_;
};

// Adam with the second moment replaced by an exponentially decayed infinity
// norm of past gradients.
class AdaMaxPolicy final : public UpdatePolicy {
 public:
  AdaMaxPolicy(Index d, double beta1, double beta2, double epsilon)
      : UpdatePolicy(PolicyId::kAdaMax, d),
        beta1_(beta1),
        beta2_(beta2),
        epsilon_(epsilon),
        first_moment_(ArrayXd::Zero(d)),
        inf_norm_(ArrayXd::Zero(d)) {}

  std::vector<Eigen::VectorXd> Accumulators() const override {
    return {first_moment_.matrix(), inf_norm_.matrix()};
  }

 protected:
  ParameterVector DoApply(const ParameterVector& params, double step_size,
                          const Eigen::VectorXd& g) override {
    const double t = static_cast<double>(StepCount());
    first_moment_ = beta1_ * first_moment_ + (1.0 - beta1_) * g.array();
    inf_norm_ = (beta2_ * inf_norm_).max(g.array().abs());
    const double correction = 1.0 - std::pow(beta1_, t);
    return (params.array() -
            (step_size / correction) * first_moment_ / (inf_norm_ + epsilon_))
        .matrix();
  }

 private:
  double beta1_;
  double beta2_;
  double epsilon_;
  ArrayXd first_moment_;
  ArrayXd inf_norm_;
};

// Memory-based rule with a per-coordinate trust ratio. The decaying averages
// are normalized by the accumulated weight so the ratio estimate is unbiased
// from the first step, keeping |step| <= step_size; the raw form with
// mem = 1 starts at half weight and overshoots by sqrt(2).
class Smorms3Policy final : public UpdatePolicy {
 public:
  Smorms3Policy(Index d, double epsilon)
      : UpdatePolicy(PolicyId::kSmorms3, d),
        epsilon_(epsilon),
        memory_(ArrayXd::Ones(d)),
        avg_grad_(ArrayXd::Zero(d)),
        avg_sq_grad_(ArrayXd::Zero(d)),
        weight_(ArrayXd::Zero(d)) {}

  std::vector<Eigen::VectorXd> Accumulators() const override {
    return {avg_grad_.matrix(), avg_sq_grad_.matrix(), weight_.matrix()};
  }

 protected:
  ParameterVector DoApply(const ParameterVector& params, double step_size,
                          const Eigen::VectorXd& g) override {
    const ArrayXd rate = (memory_ + 1.0).inverse();
    avg_grad_ = (1.0 - rate) * avg_grad_ + rate * g.array();
    avg_sq_grad_ = (1.0 - rate) * avg_sq_grad_ + rate * g.array().square();
    weight_ = (1.0 - rate) * weight_ + rate;
    const ArrayXd g1 = avg_grad_ / weight_;
    const ArrayXd g2 = avg_sq_grad_ / weight_;
    const ArrayXd ratio = g1.square() / (g2 + epsilon_);
    memory_ = 1.0 + memory_ * (1.0 - ratio);
    return (params.array() - g.array() * ratio.min(step_size) / (g2.sqrt() + epsilon_)).matrix();
  }

 private:
  double epsilon_;
  ArrayXd memory_;
  ArrayXd avg_grad_;
  ArrayXd avg_sq_grad_;
  ArrayXd weight_;
};

}  // namespace

std::unique_ptr<UpdatePolicy> MakeUpdatePolicy(PolicyId id, Index dimension,
                                               const PolicyOptions& options) {
  if (dimension < 1) throw ConfigError("policy dimension must be >= 1");
  const auto epsilon = [&options](double fallback) {
    const double eps = options.epsilon.value_or(fallback);
    RequirePositive(eps, "epsilon");
    return eps;
  };
  switch (id) {
    case PolicyId::kVanilla:
      return std::make_unique<VanillaPolicy>(dimension);
    case PolicyId::kMomentum:
      if (!(options.momentum >= 0.0 && options.momentum < 1.0)) {
        std::ostringstream msg;
        msg << "momentum must lie in [0, 1); got " << options.momentum;
        throw ConfigError(msg.str());
      }
      return std::make_unique<MomentumPolicy>(dimension, options.momentum);
    case PolicyId::kAdaGrad:
      return std::make_unique<AdaGradPolicy>(dimension, epsilon(1e-8));
    case PolicyId::kAdaDelta:
      RequireOpenUnit(options.rho, "rho");
      return std::make_unique<AdaDeltaPolicy>(dimension, options.rho, epsilon(1e-6));
    case PolicyId::kRmsProp:
      RequireOpenUnit(options.decay, "decay");
      return std::make_unique<RmsPropPolicy>(dimension, options.decay, epsilon(1e-8));
    case PolicyId::kAdam:
      RequireOpenUnit(options.beta1, "beta1");
      RequireOpenUnit(options.beta2, "beta2");
      return std::make_unique<AdamPolicy>(dimension, options.beta1, options.beta2, epsilon(1e-8));
    case PolicyId::kAdaMax:
      RequireOpenUnit(options.beta1, "beta1");
      RequireOpenUnit(options.beta2, "beta2");
      return std::make_unique<AdaMaxPolicy>(dimension, options.beta1, options.beta2,
                                            epsilon(1e-8));
    case PolicyId::kSmorms3:
      return std::make_unique<Smorms3Policy>(dimension, epsilon(1e-16));
  }
  throw ConfigError("unknown update policy id");
}

}  // namespace optframe
