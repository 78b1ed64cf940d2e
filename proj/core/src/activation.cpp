#include "hsnet/activation.hpp"

#include <algorithm>
#include <sstream>

#include "hsnet/errors.hpp"

namespace hsnet {

std::string_view activation_name(ActivationKind kind) noexcept {
  switch (kind) {
    case ActivationKind::HyperSinh: return "hyper-sinh";
    case ActivationKind::Relu: return "relu";
    case ActivationKind::Sigmoid: return "sigmoid";
    case ActivationKind::Tanh: return "tanh";
  }
  return "unknown";
}

std::optional<ActivationKind> parse_activation(std::string_view name) noexcept {
  for (ActivationKind kind : kAllActivations) {
    if (activation_name(kind) == name) return kind;
  }
  return std::nullopt;
}

Tensor act_map(ActivationKind kind, const Tensor& pre_activation) {
  Tensor out = pre_activation;
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double y = act_forward(kind, pre_activation[i]);
    if (!std::isfinite(y)) {
      std::ostringstream os;
      os << activation_name(kind) << " produced a non-finite value at pre-activation "
         << pre_activation[i];
      throw NumericDivergence(os.str(), pre_activation[i]);
    }
    out[i] = y;
  }
  return out;
}

Tensor act_backward(ActivationKind kind, const Tensor& pre_activation, const Tensor& upstream) {
  if (pre_activation.shape() != upstream.shape()) {
    throw ShapeError("act_backward: pre-activation " + shape_to_string(pre_activation.shape()) +
                     " vs upstream " + shape_to_string(upstream.shape()));
  }
  Tensor out = upstream;
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = upstream[i] * act_derivative(kind, pre_activation[i]);
  }
  return out;
}

Tensor softmax(const Tensor& v) {
  if (v.rank() != 1) throw ShapeError("softmax expects a rank-1 tensor");
  for (double x : v.values()) {
    if (!std::isfinite(x)) throw NumericDivergence("softmax input is not finite", x);
  }
  const double top = *std::max_element(v.values().begin(), v.values().end());
  Tensor out = v;
  double total = 0.0;
  for (double& x : out.values()) {
    x = std::exp(x - top);
    total += x;
  }
  for (double& x : out.values()) x /= total;
  return out;
}

}  // namespace hsnet
