#include "hsnet/network.hpp"

#include <algorithm>

#include "hsnet/errors.hpp"

namespace hsnet {
namespace {

std::unique_ptr<Layer> make_layer(const LayerSpec& spec, const Shape& in, Rng& rng) {
  if (const auto* d = std::get_if<DenseSpec>(&spec)) {
    if (in.size() != 1) {
      throw ConfigError("Dense needs a flat input, got " + shape_to_string(in) + " (add Flatten)");
    }
    return std::make_unique<DenseLayer>(*d, in[0], rng);
  }
  if (const auto* c = std::get_if<Conv2DSpec>(&spec)) return std::make_unique<Conv2DLayer>(*c, in, rng);
  if (const auto* p = std::get_if<MaxPool2DSpec>(&spec)) {
    if (p->window != 2) {
      throw ConfigError("MaxPool2D window must be 2x2, got " + std::to_string(p->window));
    }
    return std::make_unique<MaxPool2DLayer>(in);
  }
  if (std::holds_alternative<FlattenSpec>(spec)) return std::make_unique<FlattenLayer>(in);
  return std::make_unique<DropoutLayer>(std::get<DropoutSpec>(spec).rate, in);
}

}  // namespace

Network::Network(const ModelConfig& config, Rng& init_rng) : config_(config) {
  if (config_.layers.empty()) throw ConfigError("model has no layers");
  if (config_.input_shape.empty()) throw ConfigError("model input shape is empty");
  if (config_.num_classes < 2) throw ConfigError("model needs at least 2 classes");
  if (config_.batch_size == 0) throw ConfigError("batch size must be positive");
  Shape current = config_.input_shape;
  for (const LayerSpec& spec : config_.layers) {
    layers_.push_back(make_layer(spec, current, init_rng));
    current = layers_.back()->output_shape();
    shapes_.push_back(current);
  }
  if (!std::holds_alternative<DenseSpec>(config_.layers.back()) ||
      current != Shape{config_.num_classes}) {
    throw ConfigError("final layer must be Dense(" + std::to_string(config_.num_classes) +
                      "), got output " + shape_to_string(current));
  }
}

Tensor Network::forward(const Tensor& batch, Mode mode, Rng& rng) {
  Tensor x = layers_.front()->forward(batch, mode, rng);
  for (std::size_t i = 1; i < layers_.size(); ++i) x = layers_[i]->forward(x, mode, rng);
  return x;
}

void Network::backward(const Tensor& grad_logits) {
  Tensor grad = grad_logits;
  for (std::size_t i = layers_.size(); i-- > 0;) grad = layers_[i]->backward(grad, i > 0);
}

std::vector<Parameter*> Network::parameters() {
  std::vector<Parameter*> out;
  for (auto& layer : layers_) {
    for (Parameter& p : layer->parameters()) out.push_back(&p);
  }
  return out;
}

std::size_t Network::parameter_count() {
  std::size_t n = 0;
  for (Parameter* p : parameters()) n += p->value.size();
  return n;
}

double Network::max_abs_preactivation() const {
  double m = 0.0;
  for (const auto& layer : layers_) m = std::max(m, layer->max_abs_preactivation());
  return m;
}

std::vector<int> argmax_rows(const Tensor& logits) {
  if (logits.rank() != 2) throw ShapeError("argmax_rows expects a rank-2 tensor");
  const std::size_t k = logits.dim(1);
  std::vector<int> out(logits.dim(0));
  for (std::size_t r = 0; r < out.size(); ++r) {
    const double* row = logits.data() + r * k;
    out[r] = static_cast<int>(std::max_element(row, row + k) - row);
  }
  return out;
}

}  // namespace hsnet
