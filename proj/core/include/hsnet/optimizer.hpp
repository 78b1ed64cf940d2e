#pragma once

#include "hsnet/layers.hpp"
#include "hsnet/model_config.hpp"

namespace hsnet {

/// Applies one update to `param` from `param.grad`.
/// SGD: w -= lr * g.
/// Adam: m = b1*m + (1-b1)*g, v = b2*v + (1-b2)*g^2,
///       w -= lr * (m / (1-b1^t)) / (sqrt(v / (1-b2^t)) + eps).
void optimizer_step(Parameter& param, const OptimizerConfig& config);

}  // namespace hsnet
