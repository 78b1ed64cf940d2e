#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "hsnet/rng.hpp"
#include "hsnet/tensor.hpp"

namespace hsnet {

/// Bag-of-words samples: sorted, unique word indices per sample, each < vocab.
struct SparseRows {
  std::size_t vocab = 0;
  std::vector<std::vector<std::uint32_t>> rows;
};

/**
 * Features plus integer labels.
 *
 * Image data is held densely as [N, H, W, C] in [0, 1]; text data is held
 * as SparseRows and multi-hot encoded per batch. The constructor checks
 * that every label lies in [0, num_classes) and that sparse indices are in
 * range; loaders additionally check the [0, 1] pixel range.
 */
class LabeledDataset {
 public:
  LabeledDataset(std::string name, Tensor features, std::vector<int> labels,
                 std::size_t num_classes);
  LabeledDataset(std::string name, SparseRows features, std::vector<int> labels,
                 std::size_t num_classes);

  [[nodiscard]] const std::string& name() const noexcept { return name_; }
  [[nodiscard]] std::size_t size() const noexcept { return labels_.size(); }
  [[nodiscard]] std::size_t num_classes() const noexcept { return num_classes_; }
  [[nodiscard]] std::span<const int> labels() const noexcept { return labels_; }
  [[nodiscard]] bool is_sparse() const noexcept {
    return std::holds_alternative<SparseRows>(features_);
  }
  /// Shape of one sample, e.g. {28, 28, 1} or {10000}.
  [[nodiscard]] const Shape& sample_shape() const noexcept { return sample_shape_; }

  [[nodiscard]] const Tensor& dense_features() const;
  [[nodiscard]] const SparseRows& sparse_features() const;

  /// Dense [indices.size()] + sample_shape tensor of the selected samples.
  [[nodiscard]] Tensor batch(std::span<const std::size_t> indices) const;
  [[nodiscard]] std::vector<int> batch_labels(std::span<const std::size_t> indices) const;

  /// Copy holding only the selected samples, in the given order.
  [[nodiscard]] LabeledDataset select(std::span<const std::size_t> indices) const;

 private:
  std::string name_;
  std::variant<Tensor, SparseRows> features_;
  std::vector<int> labels_;
  std::size_t num_classes_;
  Shape sample_shape_;
};

/// Reads an IDX image file (magic 0x00000803) and label file (0x00000801).
/// Pixels are divided by 255; result is [N, rows, cols, 1].
LabeledDataset load_idx(const std::filesystem::path& images, const std::filesystem::path& labels,
                        std::size_t num_classes = 10);

/// Reads CIFAR-10 binary batches: 3073-byte records of one label byte then
/// 1024 R, 1024 G and 1024 B bytes. Result is [N, 32, 32, 3] in [0, 1].
LabeledDataset load_cifar10(std::span<const std::filesystem::path> batch_paths);

/// Reads line-delimited JSON objects {"label": int, "indices": [int, ...]}.
/// Indices >= vocab are dropped as out-of-vocabulary; blank lines are
/// skipped. num_classes defaults to max(label) + 1.
LabeledDataset load_text_jsonl(const std::filesystem::path& path, std::size_t vocab,
                               std::optional<std::size_t> num_classes = std::nullopt);

/// Binary bag-of-words vector; duplicates collapse. Throws DataError if an
/// index is negative or >= vocab.
Tensor multi_hot(std::span<const std::int64_t> indices, std::size_t vocab);

/// n samples drawn without replacement (partial Fisher-Yates), in draw order.
LabeledDataset subset(const LabeledDataset& data, std::size_t n, Rng& rng);

/// Fisher-Yates permutation of [0, n).
std::vector<std::size_t> shuffled_indices(std::size_t n, Rng& rng);

}  // namespace hsnet
