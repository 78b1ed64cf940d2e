#include "hsnet/metrics.hpp"

#include <numeric>
#include <string>

#include "hsnet/errors.hpp"

namespace hsnet {

ConfusionMatrix::ConfusionMatrix(std::size_t num_classes)
    : k_(num_classes), counts_(num_classes * num_classes, 0) {
  if (num_classes == 0) throw DataError("confusion matrix needs at least one class");
}

void ConfusionMatrix::add(std::size_t truth, std::size_t predicted) {
  if (truth >= k_ || predicted >= k_) throw DataError("class index outside confusion matrix");
  ++counts_[truth * k_ + predicted];
  ++total_;
}

std::uint64_t ConfusionMatrix::trace() const noexcept {
  std::uint64_t t = 0;
  for (std::size_t c = 0; c < k_; ++c) t += counts_[c * k_ + c];
  return t;
}

std::uint64_t ConfusionMatrix::row_sum(std::size_t truth) const {
  std::uint64_t s = 0;
  for (std::size_t p = 0; p < k_; ++p) s += at(truth, p);
  return s;
}

std::uint64_t ConfusionMatrix::col_sum(std::size_t predicted) const {
  std::uint64_t s = 0;
  for (std::size_t t = 0; t < k_; ++t) s += at(t, predicted);
  return s;
}

ConfusionMatrix confusion(std::span<const int> y_true, std::span<const int> y_pred,
                          std::size_t num_classes) {
  if (y_true.size() != y_pred.size()) {
    throw DataError("y_true has " + std::to_string(y_true.size()) + " entries, y_pred " +
                    std::to_string(y_pred.size()));
  }
  if (y_true.empty()) throw DataError("cannot evaluate zero samples");
  ConfusionMatrix cm(num_classes);
  for (std::size_t i = 0; i < y_true.size(); ++i) {
    const int t = y_true[i];
    const int p = y_pred[i];
    if (t < 0 || p < 0 || static_cast<std::size_t>(t) >= num_classes ||
        static_cast<std::size_t>(p) >= num_classes) {
      throw DataError("label pair (" + std::to_string(t) + ", " + std::to_string(p) +
                      ") outside [0, " + std::to_string(num_classes) + ")");
    }
    cm.add(static_cast<std::size_t>(t), static_cast<std::size_t>(p));
  }
  return cm;
}

double accuracy(const ConfusionMatrix& cm) {
  if (cm.total() == 0) throw DataError("accuracy of an empty confusion matrix");
  return static_cast<double>(cm.trace()) / static_cast<double>(cm.total());
}

EvalReport classification_report(const ConfusionMatrix& cm) {
  EvalReport report;
  report.accuracy = accuracy(cm);
  report.per_class.resize(cm.num_classes());
  const double total = static_cast<double>(cm.total());
  double wp = 0.0;
  double wf = 0.0;
  for (std::size_t c = 0; c < cm.num_classes(); ++c) {
    ClassMetrics& m = report.per_class[c];
    const double tp = static_cast<double>(cm.at(c, c));
    const std::uint64_t predicted = cm.col_sum(c);
    m.support = cm.row_sum(c);
    m.precision = predicted ? tp / static_cast<double>(predicted) : 0.0;
    m.recall = m.support ? tp / static_cast<double>(m.support) : 0.0;
    m.f1 = (m.precision + m.recall) > 0.0
               ? 2.0 * m.precision * m.recall / (m.precision + m.recall)
               : 0.0;
    wp += static_cast<double>(m.support) * m.precision;
    wf += static_cast<double>(m.support) * m.f1;
  }
  report.weighted_precision = wp / total;
  report.weighted_recall = report.accuracy;
  report.weighted_f1 = wf / total;
  return report;
}

}  // namespace hsnet
