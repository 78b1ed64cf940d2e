#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "hsnet/model_config.hpp"
#include "hsnet/rng.hpp"
#include "hsnet/tensor.hpp"

namespace hsnet {

enum class Mode { Train, Infer };

/// A trainable tensor with its gradient and Adam moment slots.
struct Parameter {
  Tensor value;
  Tensor grad;
  Tensor first_moment;
  Tensor second_moment;
  std::uint64_t steps = 0;

  explicit Parameter(Tensor initial);
};

/**
 * One network stage. Tensors passed to forward/backward carry a leading
 * batch axis; output_shape works on per-sample shapes. forward caches what
 * backward needs, so backward must follow a forward on the same batch.
 */
class Layer {
 public:
  virtual ~Layer() = default;

  [[nodiscard]] virtual LayerSpec spec() const = 0;
  [[nodiscard]] virtual Shape output_shape() const = 0;

  virtual Tensor forward(const Tensor& x, Mode mode, Rng& rng) = 0;

  /// Writes parameter gradients and returns dLoss/dInput when
  /// want_input_grad is set (an empty Tensor otherwise).
  virtual Tensor backward(const Tensor& grad_out, bool want_input_grad) = 0;

  virtual std::span<Parameter> parameters() { return {}; }

  /// Largest |pre-activation| of the last forward pass (0 without activation).
  [[nodiscard]] virtual double max_abs_preactivation() const { return 0.0; }
};

/// x . W + b, then the optional activation. W is [fan_in, units].
class DenseLayer final : public Layer {
 public:
  DenseLayer(DenseSpec spec, std::size_t fan_in, Rng& init_rng);

  [[nodiscard]] LayerSpec spec() const override { return spec_; }
  [[nodiscard]] Shape output_shape() const override { return {spec_.units}; }
  Tensor forward(const Tensor& x, Mode mode, Rng& rng) override;
  Tensor backward(const Tensor& grad_out, bool want_input_grad) override;
  std::span<Parameter> parameters() override { return params_; }
  [[nodiscard]] double max_abs_preactivation() const override { return max_abs_pre_; }

  Tensor& weights() { return params_[0].value; }
  Tensor& bias() { return params_[1].value; }

 private:
  DenseSpec spec_;
  std::size_t fan_in_;
  std::vector<Parameter> params_;
  Tensor input_;
  Tensor pre_;
  double max_abs_pre_ = 0.0;
};

/// Valid-padding, stride-1 3x3 cross-correlation over NHWC input.
/// W is [3, 3, in_channels, filters].
class Conv2DLayer final : public Layer {
 public:
  Conv2DLayer(Conv2DSpec spec, const Shape& input_shape, Rng& init_rng);

  [[nodiscard]] LayerSpec spec() const override { return spec_; }
  [[nodiscard]] Shape output_shape() const override;
  Tensor forward(const Tensor& x, Mode mode, Rng& rng) override;
  Tensor backward(const Tensor& grad_out, bool want_input_grad) override;
  std::span<Parameter> parameters() override { return params_; }
  [[nodiscard]] double max_abs_preactivation() const override { return max_abs_pre_; }

  Tensor& weights() { return params_[0].value; }
  Tensor& bias() { return params_[1].value; }

 private:
  Conv2DSpec spec_;
  std::size_t height_, width_, channels_;
  std::vector<Parameter> params_;
  std::size_t batch_ = 0;
  std::vector<double> columns_;  // im2col of the last input
  Tensor pre_;
  double max_abs_pre_ = 0.0;
};

struct PoolResult {
  Tensor output;
  /// Flat input index of each output element's maximum.
  std::vector<std::size_t> argmax;
};

/// Non-overlapping 2x2 max pooling over NHWC; odd trailing rows/columns are
/// dropped and ties resolve to the first position in row-major window order.
PoolResult maxpool2d_forward(const Tensor& x);

class MaxPool2DLayer final : public Layer {
 public:
  explicit MaxPool2DLayer(const Shape& input_shape);

  [[nodiscard]] LayerSpec spec() const override { return MaxPool2DSpec{}; }
  [[nodiscard]] Shape output_shape() const override;
  Tensor forward(const Tensor& x, Mode mode, Rng& rng) override;
  Tensor backward(const Tensor& grad_out, bool want_input_grad) override;

 private:
  Shape input_shape_;
  Shape batch_input_shape_;
  std::vector<std::size_t> argmax_;
};

class FlattenLayer final : public Layer {
 public:
  explicit FlattenLayer(const Shape& input_shape) : input_shape_(input_shape) {}

  [[nodiscard]] LayerSpec spec() const override { return FlattenSpec{}; }
  [[nodiscard]] Shape output_shape() const override { return {shape_size(input_shape_)}; }
  Tensor forward(const Tensor& x, Mode mode, Rng& rng) override;
  Tensor backward(const Tensor& grad_out, bool want_input_grad) override;

 private:
  Shape input_shape_;
  Shape batch_input_shape_;
};

struct DropoutResult {
  Tensor output;
  /// Per-element multiplier applied (0 or 1/(1-rate)); empty in inference.
  std::vector<double> scale;
};

/// Inverted dropout. Throws ConfigError unless 0 <= rate < 1.
DropoutResult dropout_forward(const Tensor& x, double rate, Mode mode, Rng& rng);

class DropoutLayer final : public Layer {
 public:
  DropoutLayer(double rate, const Shape& input_shape);

  [[nodiscard]] LayerSpec spec() const override { return DropoutSpec{rate_}; }
  [[nodiscard]] Shape output_shape() const override { return input_shape_; }
  Tensor forward(const Tensor& x, Mode mode, Rng& rng) override;
  Tensor backward(const Tensor& grad_out, bool want_input_grad) override;

 private:
  double rate_;
  Shape input_shape_;
  std::vector<double> scale_;
};

/// Glorot-uniform limit sqrt(6 / (fan_in + fan_out)).
double glorot_limit(std::size_t fan_in, std::size_t fan_out);

}  // namespace hsnet
