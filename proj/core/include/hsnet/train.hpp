#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "hsnet/dataset.hpp"
#include "hsnet/network.hpp"

namespace hsnet {

struct TrainHistory {
  std::vector<double> loss;
  std::vector<double> accuracy;
  std::vector<double> seconds;
  /// Largest |pre-activation| seen during each epoch.
  std::vector<double> max_abs_preactivation;

  [[nodiscard]] std::size_t epochs() const noexcept { return loss.size(); }
};

/// Called after each completed epoch (0-based index).
using EpochCallback = std::function<void(std::size_t epoch, const TrainHistory&)>;

/**
 * Runs config().epochs passes of shuffled mini-batch training on `net`.
 *
 * Each epoch draws a fresh permutation from `rng`; dropout masks come from
 * the same stream, so (network state, data, rng seed) determine the result.
 * Throws NumericDivergence as soon as an activation or the loss goes
 * non-finite.
 */
TrainHistory fit(Network& net, const LabeledDataset& data, Rng& rng,
                 const EpochCallback& on_epoch = {});

struct TrainResult {
  Network network;
  TrainHistory history;
};

/// Builds a network from `config` (weights drawn from `rng`), then fits it.
TrainResult train(const ModelConfig& config, const LabeledDataset& data, Rng& rng,
                  const EpochCallback& on_epoch = {});

/// Inference-mode argmax predictions for a [N] + input_shape feature tensor.
std::vector<int> predict(Network& net, const Tensor& features, std::size_t batch_size = 256);
std::vector<int> predict(Network& net, const LabeledDataset& data, std::size_t batch_size = 256);

}  // namespace hsnet
