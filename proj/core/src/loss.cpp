#include "hsnet/loss.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hsnet/errors.hpp"

namespace hsnet {

LossResult softmax_cross_entropy(const Tensor& logits, std::span<const int> labels) {
  if (logits.rank() != 2) throw ShapeError("cross-entropy expects [batch, K] logits");
  const std::size_t batch = logits.dim(0);
  const std::size_t k = logits.dim(1);
  if (labels.size() != batch) {
    throw ShapeError("cross-entropy: " + std::to_string(labels.size()) + " labels for batch of " +
                     std::to_string(batch));
  }

  LossResult result{0.0, Tensor({batch, k})};
  const double inv_batch = 1.0 / static_cast<double>(batch);
  for (std::size_t r = 0; r < batch; ++r) {
    const int label = labels[r];
    if (label < 0 || static_cast<std::size_t>(label) >= k) {
      throw DataError("label " + std::to_string(label) + " outside [0, " + std::to_string(k) + ")");
    }
    const double* row = logits.data() + r * k;
    double top = row[0];
    for (std::size_t j = 0; j < k; ++j) {
      if (!std::isfinite(row[j])) throw NumericDivergence("non-finite logit", row[j]);
      top = std::max(top, row[j]);
    }
    double total = 0.0;
    double* grad = result.grad_logits.data() + r * k;
    for (std::size_t j = 0; j < k; ++j) {
      grad[j] = std::exp(row[j] - top);
      total += grad[j];
    }
    result.loss += (std::log(total) + top - row[label]) * inv_batch;
    for (std::size_t j = 0; j < k; ++j) grad[j] = grad[j] / total * inv_batch;
    grad[label] -= inv_batch;
  }
  return result;
}

}  // namespace hsnet
