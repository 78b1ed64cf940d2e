#pragma once

#include <iosfwd>
#include <string_view>

#include "hsnet/experiment.hpp"

namespace hsnet {

/**
 * Applies one setting to `cfg`. Keys (hyphens and underscores are
 * interchangeable):
 *
 *   benchmark      cifar10 | fashion_mnist | mnist | reuters | imdb
 *   activations    comma list, or "all"
 *   epochs         positive integer, or "default"
 *   train_n        positive integer, or "full"
 *   test_n         positive integer, or "full"
 *   seed           unsigned 64-bit integer
 *   data_dir, out  paths
 *   format         csv | markdown
 *   batch_size, vocab, jobs   positive integers
 *   optimizer      adam | sgd (resets the learning rate to its default)
 *   learning_rate  positive number
 *
 * Throws ConfigError on an unknown key or an invalid value.
 */
void apply_setting(ExperimentConfig& cfg, std::string_view key, std::string_view value);

/// Reads "key = value" lines; '#' starts a comment, blank lines are
/// ignored. Errors carry the 1-based line number.
ExperimentConfig parse_run_config(std::istream& in, ExperimentConfig base = {});

}  // namespace hsnet
