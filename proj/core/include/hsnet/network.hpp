#pragma once

#include <memory>
#include <vector>

#include "hsnet/layers.hpp"
#include "hsnet/model_config.hpp"

namespace hsnet {

/**
 * A sequential stack of layers built from a ModelConfig.
 *
 * Construction validates the layer chain (3x3 kernels, 2x2 pooling, rank
 * compatibility, final width == num_classes) and draws Glorot-uniform
 * weights from `init_rng` in layer order.
 */
class Network {
 public:
  Network(const ModelConfig& config, Rng& init_rng);

  Network(Network&&) noexcept = default;
  Network& operator=(Network&&) noexcept = default;

  [[nodiscard]] const ModelConfig& config() const noexcept { return config_; }
  [[nodiscard]] std::size_t num_layers() const noexcept { return layers_.size(); }
  [[nodiscard]] Layer& layer(std::size_t i) { return *layers_.at(i); }
  /// Per-sample output shape after layer i.
  [[nodiscard]] const Shape& shape_after(std::size_t i) const { return shapes_.at(i); }

  /// Returns logits [batch, num_classes]; `batch` is [batch] + input_shape.
  Tensor forward(const Tensor& batch, Mode mode, Rng& rng);

  /// Back-propagates dLoss/dLogits through the cached forward pass, writing
  /// every Parameter::grad.
  void backward(const Tensor& grad_logits);

  [[nodiscard]] std::vector<Parameter*> parameters();
  [[nodiscard]] std::size_t parameter_count();

  /// Largest |pre-activation| over all activated layers in the last forward.
  [[nodiscard]] double max_abs_preactivation() const;

 private:
  ModelConfig config_;
  std::vector<std::unique_ptr<Layer>> layers_;
  std::vector<Shape> shapes_;
};

/// Row-wise argmax; ties go to the lowest index.
std::vector<int> argmax_rows(const Tensor& logits);

}  // namespace hsnet
