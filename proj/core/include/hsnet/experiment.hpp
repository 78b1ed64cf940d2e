#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hsnet/activation.hpp"
#include "hsnet/dataset.hpp"
#include "hsnet/metrics.hpp"
#include "hsnet/model_config.hpp"
#include "hsnet/train.hpp"

namespace hsnet {

enum class Benchmark { Cifar10, FashionMnist, Mnist, Reuters, Imdb };

inline constexpr std::size_t kTextVocab = 10000;

std::string_view benchmark_name(Benchmark b) noexcept;
std::optional<Benchmark> parse_benchmark(std::string_view name) noexcept;
/// "CNN" for cifar10/mnist, "FC-NN" otherwise.
std::string_view classifier_name(Benchmark b) noexcept;
/// Epoch counts of the published tables: 10, 20, 15, 3, 3.
std::size_t default_epochs(Benchmark b) noexcept;
std::size_t benchmark_classes(Benchmark b) noexcept;

enum class ReportFormat { Csv, Markdown };

struct ExperimentConfig {
  Benchmark benchmark = Benchmark::Mnist;
  std::vector<ActivationKind> activations{kAllActivations.begin(), kAllActivations.end()};
  /// Defaults to default_epochs(benchmark).
  std::optional<std::size_t> epochs;
  /// nullopt selects the full split.
  std::optional<std::size_t> train_n;
  std::optional<std::size_t> test_n;
  std::uint64_t seed = 42;
  std::filesystem::path data_dir = "data";
  /// Report destination; empty means "do not write".
  std::filesystem::path out;
  ReportFormat format = ReportFormat::Csv;
  std::size_t batch_size = 32;
  OptimizerConfig optimizer = AdamConfig{};
  std::size_t vocab = kTextVocab;
  /// Activation variants trained concurrently.
  std::size_t jobs = 1;
};

/// Throws ConfigError for zero sizes, empty activation lists, etc.
void validate(const ExperimentConfig& cfg);

// Architectures of the five benchmarks. Epochs are set to the table values.

/// Conv(32)-Pool-Conv(64)-Pool-Conv(64)-Flatten-Dense(64, relu)-Dense(10).
ModelConfig build_cifar10_cnn(ActivationKind act);
/// Flatten-Dense(128, act)-Dense(10).
ModelConfig build_fashion_fcnn(ActivationKind act);
/// Conv(32)-Pool-Conv(64)-Pool-Flatten-Dropout(0.5)-Dense(10, softmax).
ModelConfig build_mnist_cnn(ActivationKind act);
/// Dense(512, act)-Dropout(0.5)-Dense(num_classes, softmax) on 10000 inputs.
ModelConfig build_text_fcnn(ActivationKind act, std::size_t num_classes);
ModelConfig build_model(Benchmark b, ActivationKind act);

struct BenchmarkData {
  LabeledDataset train;
  LabeledDataset test;
};

/**
 * Loads a benchmark from `data_dir`:
 *   mnist/, fashion_mnist/   {train,t10k}-{images-idx3,labels-idx1}-ubyte
 *   cifar10/                 data_batch_{1..5}.bin, test_batch.bin
 *   reuters/, imdb/          train.jsonl, test.jsonl
 * Throws IoError naming the first missing file.
 */
BenchmarkData load_benchmark(Benchmark b, const std::filesystem::path& data_dir,
                             std::size_t vocab = kTextVocab);

struct ReportRow {
  std::string benchmark;
  std::string classifier;
  std::string activation;
  std::size_t epochs = 0;
  std::size_t train_samples = 0;
  std::size_t test_samples = 0;
  /// Empty when training diverged.
  std::optional<EvalReport> eval;
  /// Divergence message when eval is empty.
  std::string failure;
  TrainHistory history;
};

/// Loads data, subsets it, then trains and evaluates one model per activation.
/// Divergence marks the row instead of aborting the sweep.
std::vector<ReportRow> run_experiment(const ExperimentConfig& cfg, std::ostream& log);

/// Same, on already loaded (full) splits.
std::vector<ReportRow> run_experiment(const ExperimentConfig& cfg, const BenchmarkData& data,
                                      std::ostream& log);

}  // namespace hsnet
