#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace hsnet {

/// K x K counts; cell (t, p) is the number of samples of true class t
/// predicted as p.
class ConfusionMatrix {
 public:
  explicit ConfusionMatrix(std::size_t num_classes);

  [[nodiscard]] std::size_t num_classes() const noexcept { return k_; }
  [[nodiscard]] std::uint64_t at(std::size_t truth, std::size_t predicted) const {
    return counts_.at(truth * k_ + predicted);
  }
  void add(std::size_t truth, std::size_t predicted);

  [[nodiscard]] std::uint64_t total() const noexcept { return total_; }
  [[nodiscard]] std::uint64_t trace() const noexcept;
  [[nodiscard]] std::uint64_t row_sum(std::size_t truth) const;
  [[nodiscard]] std::uint64_t col_sum(std::size_t predicted) const;

 private:
  std::size_t k_;
  std::vector<std::uint64_t> counts_;
  std::uint64_t total_ = 0;
};

/// Throws DataError on length mismatch, empty input or labels outside [0, k).
ConfusionMatrix confusion(std::span<const int> y_true, std::span<const int> y_pred,
                          std::size_t num_classes);

/// trace / total; throws DataError on an empty matrix.
double accuracy(const ConfusionMatrix& cm);

struct ClassMetrics {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::uint64_t support = 0;
};

struct EvalReport {
  double accuracy = 0.0;
  std::vector<ClassMetrics> per_class;
  double weighted_precision = 0.0;
  double weighted_recall = 0.0;
  double weighted_f1 = 0.0;
};

/**
 * Per-class precision/recall/F1 and their support-weighted averages.
 *
 * Undefined ratios (a class never predicted, never present, or with
 * precision + recall == 0) are reported as 0. Because support(c) * recall(c)
 * is exactly the diagonal count, weighted recall is computed as trace/total
 * and equals accuracy bit-for-bit.
 */
EvalReport classification_report(const ConfusionMatrix& cm);

}  // namespace hsnet
