#pragma once

#include <span>

#include "hsnet/tensor.hpp"

namespace hsnet {

struct LossResult {
  double loss = 0.0;
  /// (softmax(logits) - onehot(labels)) / batch
  Tensor grad_logits;
};

/// Mean softmax cross-entropy over a [batch, K] logit matrix.
/// Throws DataError on out-of-range labels, NumericDivergence on
/// non-finite logits.
LossResult softmax_cross_entropy(const Tensor& logits, std::span<const int> labels);

}  // namespace hsnet
