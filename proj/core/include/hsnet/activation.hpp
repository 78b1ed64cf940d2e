#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <string_view>

#include "hsnet/tensor.hpp"

namespace hsnet {

enum class ActivationKind {
  HyperSinh,
  Relu,
  Sigmoid,
  Tanh,
};

inline constexpr std::array<ActivationKind, 4> kAllActivations = {
    ActivationKind::HyperSinh, ActivationKind::Relu, ActivationKind::Sigmoid,
    ActivationKind::Tanh};

/// hyper-sinh coefficients. Fixed constants, never trained.
namespace hyper_sinh {
/// Multiplier of sinh on the positive branch.
inline constexpr double kPositiveScale = 1.0 / 3.0;
/// Multiplier of x^3 on the branch x <= 0.
inline constexpr double kNegativeScale = 1.0 / 4.0;
/// d/dx of kNegativeScale * x^3 is kNegativeDerivScale * x^2.
inline constexpr double kNegativeDerivScale = 3.0 / 4.0;
}  // namespace hyper_sinh

/// Lowercase config/CLI name: "hyper-sinh", "relu", "sigmoid", "tanh".
std::string_view activation_name(ActivationKind kind) noexcept;
std::optional<ActivationKind> parse_activation(std::string_view name) noexcept;

/**
 * Scalar activation value.
 *
 * hyper-sinh is sinh(x)/3 for x > 0 and x^3/4 for x <= 0. Large positive
 * inputs overflow sinh to +inf (near x = 710); callers that need a finite
 * result use act_map, which raises NumericDivergence.
 */
inline double act_forward(ActivationKind kind, double x) noexcept {
  switch (kind) {
    case ActivationKind::HyperSinh:
      return x > 0.0 ? hyper_sinh::kPositiveScale * std::sinh(x)
                     : hyper_sinh::kNegativeScale * (x * x * x);
    case ActivationKind::Relu:
      return x > 0.0 ? x : 0.0;
    case ActivationKind::Sigmoid:
      return 1.0 / (1.0 + std::exp(-x));
    case ActivationKind::Tanh:
      return std::tanh(x);
  }
  return x;
}

/// Analytic derivative. At exactly x = 0 hyper-sinh takes the cubic branch
/// (value 0), so the derivative jumps from 0 to 1/3 across the origin.
inline double act_derivative(ActivationKind kind, double x) noexcept {
  switch (kind) {
    case ActivationKind::HyperSinh:
      return x > 0.0 ? hyper_sinh::kPositiveScale * std::cosh(x)
                     : hyper_sinh::kNegativeDerivScale * (x * x);
    case ActivationKind::Relu:
      return x > 0.0 ? 1.0 : 0.0;
    case ActivationKind::Sigmoid: {
      const double s = 1.0 / (1.0 + std::exp(-x));
      return s * (1.0 - s);
    }
    case ActivationKind::Tanh: {
      const double t = std::tanh(x);
      return 1.0 - t * t;
    }
  }
  return 1.0;
}

/// Elementwise act_forward. Throws NumericDivergence carrying the offending
/// pre-activation if any output is non-finite.
Tensor act_map(ActivationKind kind, const Tensor& pre_activation);

/// upstream[i] * act_derivative(kind, pre_activation[i]).
Tensor act_backward(ActivationKind kind, const Tensor& pre_activation, const Tensor& upstream);

/// Max-shifted softmax of a rank-1 tensor.
Tensor softmax(const Tensor& v);

}  // namespace hsnet
