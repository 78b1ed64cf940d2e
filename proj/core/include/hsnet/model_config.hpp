#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hsnet/activation.hpp"
#include "hsnet/tensor.hpp"

namespace hsnet {

struct DenseSpec {
  std::size_t units = 0;
  std::optional<ActivationKind> activation;
  /// Marks a classification head declared with softmax. The layer still
  /// emits logits; softmax is applied inside the cross-entropy loss.
  bool softmax_output = false;

  friend bool operator==(const DenseSpec&, const DenseSpec&) = default;
};

struct Conv2DSpec {
  std::size_t filters = 0;
  /// Only 3 is accepted at model build.
  std::size_t kernel = 3;
  std::optional<ActivationKind> activation;

  friend bool operator==(const Conv2DSpec&, const Conv2DSpec&) = default;
};

struct MaxPool2DSpec {
  /// Only 2 is accepted at model build.
  std::size_t window = 2;

  friend bool operator==(const MaxPool2DSpec&, const MaxPool2DSpec&) = default;
};

struct FlattenSpec {
  friend bool operator==(const FlattenSpec&, const FlattenSpec&) = default;
};

struct DropoutSpec {
  double rate = 0.0;

  friend bool operator==(const DropoutSpec&, const DropoutSpec&) = default;
};

using LayerSpec = std::variant<DenseSpec, Conv2DSpec, MaxPool2DSpec, FlattenSpec, DropoutSpec>;

/// Short human-readable form, e.g. "Conv2D(32, 3x3, hyper-sinh)".
std::string describe(const LayerSpec& spec);

struct SgdConfig {
  double learning_rate = 0.01;
};

struct AdamConfig {
  double learning_rate = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-7;
};

using OptimizerConfig = std::variant<SgdConfig, AdamConfig>;

struct ModelConfig {
  std::vector<LayerSpec> layers;
  /// Per-sample input extents, e.g. {28, 28, 1} or {10000}.
  Shape input_shape;
  std::size_t num_classes = 0;
  std::size_t epochs = 1;
  std::size_t batch_size = 32;
  OptimizerConfig optimizer = AdamConfig{};
  std::uint64_t seed = 42;
};

}  // namespace hsnet
