#include "hsnet/optimizer.hpp"

#include <cmath>

namespace hsnet {
namespace {

void sgd_step(Parameter& p, const SgdConfig& cfg) {
  for (std::size_t i = 0; i < p.value.size(); ++i) p.value[i] -= cfg.learning_rate * p.grad[i];
}

void adam_step(Parameter& p, const AdamConfig& cfg) {
  ++p.steps;
  const double t = static_cast<double>(p.steps);
  const double correction1 = 1.0 - std::pow(cfg.beta1, t);
  const double correction2 = 1.0 - std::pow(cfg.beta2, t);
  for (std::size_t i = 0; i < p.value.size(); ++i) {
    const double g = p.grad[i];
    double& m = p.first_moment[i];
    double& v = p.second_moment[i];
    m = cfg.beta1 * m + (1.0 - cfg.beta1) * g;
    v = cfg.beta2 * v + (1.0 - cfg.beta2) * g * g;
    const double m_hat = m / correction1;
    const double v_hat = v / correction2;
    p.value[i] -= cfg.learning_rate * m_hat / (std::sqrt(v_hat) + cfg.epsilon);
  }
}

}  // namespace

void optimizer_step(Parameter& param, const OptimizerConfig& config) {
  if (const auto* sgd = std::get_if<SgdConfig>(&config)) {
    sgd_step(param, *sgd);
  } else {
    adam_step(param, std::get<AdamConfig>(config));
  }
}

}  // namespace hsnet
