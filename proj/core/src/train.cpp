#include "hsnet/train.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>

#include "hsnet/errors.hpp"
#include "hsnet/loss.hpp"
#include "hsnet/optimizer.hpp"

namespace hsnet {
namespace {

void check_input(const Network& net, const Shape& sample_shape) {
  if (sample_shape != net.config().input_shape) {
    throw ShapeError("data samples are " + shape_to_string(sample_shape) + " but the model expects " +
                     shape_to_string(net.config().input_shape));
  }
}

}  // namespace

TrainHistory fit(Network& net, const LabeledDataset& data, Rng& rng, const EpochCallback& on_epoch) {
  if (data.size() == 0) throw DataError("training set is empty");
  check_input(net, data.sample_shape());
  if (data.num_classes() != net.config().num_classes) {
    throw ConfigError("dataset has " + std::to_string(data.num_classes()) +
                      " classes but the model outputs " + std::to_string(net.config().num_classes));
  }

  const ModelConfig& cfg = net.config();
  const std::vector<Parameter*> params = net.parameters();
  TrainHistory history;

  for (std::size_t epoch = 0; epoch < cfg.epochs; ++epoch) {
    const auto start = std::chrono::steady_clock::now();
    const std::vector<std::size_t> order = shuffled_indices(data.size(), rng);
    double loss_sum = 0.0;
    std::size_t correct = 0;
    double max_pre = 0.0;

    for (std::size_t begin = 0; begin < order.size(); begin += cfg.batch_size) {
      const std::size_t end = std::min(order.size(), begin + cfg.batch_size);
      const std::span<const std::size_t> idx(order.data() + begin, end - begin);
      const Tensor x = data.batch(idx);
      const std::vector<int> y = data.batch_labels(idx);

      const Tensor logits = net.forward(x, Mode::Train, rng);
      max_pre = std::max(max_pre, net.max_abs_preactivation());
      LossResult lr = softmax_cross_entropy(logits, y);
      if (!std::isfinite(lr.loss)) throw NumericDivergence("training loss is not finite", lr.loss);

      const std::vector<int> pred = argmax_rows(logits);
      for (std::size_t i = 0; i < y.size(); ++i) correct += pred[i] == y[i] ? 1 : 0;
      loss_sum += lr.loss * static_cast<double>(y.size());

      net.backward(lr.grad_logits);
      for (Parameter* p : params) optimizer_step(*p, cfg.optimizer);
    }

    const double n = static_cast<double>(data.size());
    history.loss.push_back(loss_sum / n);
    history.accuracy.push_back(static_cast<double>(correct) / n);
    history.max_abs_preactivation.push_back(max_pre);
    history.seconds.push_back(
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
    if (on_epoch) on_epoch(epoch, history);
  }
  return history;
}

TrainResult train(const ModelConfig& config, const LabeledDataset& data, Rng& rng,
                  const EpochCallback& on_epoch) {
  Network net(config, rng);
  TrainHistory history = fit(net, data, rng, on_epoch);
  return {std::move(net), std::move(history)};
}

std::vector<int> predict(Network& net, const Tensor& features, std::size_t batch_size) {
  const Shape& s = features.shape();
  if (s.size() < 2 || Shape(s.begin() + 1, s.end()) != net.config().input_shape) {
    throw ShapeError("features " + shape_to_string(s) + " do not match model input " +
                     shape_to_string(net.config().input_shape));
  }
  const std::size_t n = s[0];
  const std::size_t width = shape_size(net.config().input_shape);
  std::vector<int> out;
  out.reserve(n);
  Rng unused(0);
  for (std::size_t begin = 0; begin < n; begin += batch_size) {
    const std::size_t count = std::min(batch_size, n - begin);
    Shape bs = s;
    bs[0] = count;
    std::vector<double> chunk(features.data() + begin * width,
                              features.data() + (begin + count) * width);
    const Tensor logits = net.forward(Tensor(bs, std::move(chunk)), Mode::Infer, unused);
    const std::vector<int> pred = argmax_rows(logits);
    out.insert(out.end(), pred.begin(), pred.end());
  }
  return out;
}

std::vector<int> predict(Network& net, const LabeledDataset& data, std::size_t batch_size) {
  check_input(net, data.sample_shape());
  std::vector<int> out;
  out.reserve(data.size());
  std::vector<std::size_t> idx;
  Rng unused(0);
  for (std::size_t begin = 0; begin < data.size(); begin += batch_size) {
    const std::size_t count = std::min(batch_size, data.size() - begin);
    idx.resize(count);
    std::iota(idx.begin(), idx.end(), begin);
    const Tensor logits = net.forward(data.batch(idx), Mode::Infer, unused);
    const std::vector<int> pred = argmax_rows(logits);
    out.insert(out.end(), pred.begin(), pred.end());
  }
  return out;
}

}  // namespace hsnet
