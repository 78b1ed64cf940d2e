#pragma once

#include <cstddef>
#include <cstdint>

#include "hsnet/activation.hpp"
#include "hsnet/model_config.hpp"
#include "hsnet/rng.hpp"

namespace hsnet {

/// |analytic - numeric| / max(floor, |analytic|, |numeric|).
double relative_error(double analytic, double numeric, double floor) noexcept;

struct ActivationAudit {
  ActivationKind kind{};
  std::size_t points = 0;
  double max_error = 0.0;
  double worst_x = 0.0;
};

/// act_derivative against a central difference of act_forward at `points`
/// uniform samples of [-5, 5] with |x| > 1e-3. Error is scaled by
/// max(1, |derivative|).
ActivationAudit audit_activation(ActivationKind kind, Rng& rng, std::size_t points = 1000,
                                 double h = 1e-6);

/// 4x4x1 input, Conv(2 filters, 3x3, act), Flatten, Dense(2).
ModelConfig tiny_cnn_config(ActivationKind act);

struct NetworkGradCheck {
  ActivationKind kind{};
  std::size_t parameters = 0;
  double max_rel_error = 0.0;
};

/// Back-propagated gradients of the mean cross-entropy of a random batch
/// against central differences over every weight of tiny_cnn_config(kind).
NetworkGradCheck check_network_gradients(ActivationKind kind, std::uint64_t seed,
                                         double h = 1e-6, double floor = 1e-6);

}  // namespace hsnet
