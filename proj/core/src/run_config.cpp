#include "hsnet/run_config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <string>

#include "hsnet/errors.hpp"

namespace hsnet {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::string normalize_key(std::string_view key) {
  std::string k(trim(key));
  std::replace(k.begin(), k.end(), '-', '_');
  return k;
}

std::uint64_t parse_u64(std::string_view key, std::string_view v) {
  std::uint64_t out = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (v.empty() || ec != std::errc{} || ptr != v.data() + v.size()) {
    throw ConfigError(std::string(key) + ": expected a non-negative integer, got '" +
                      std::string(v) + "'");
  }
  return out;
}

std::size_t parse_positive(std::string_view key, std::string_view v) {
  const std::uint64_t n = parse_u64(key, v);
  if (n == 0) throw ConfigError(std::string(key) + " must be positive");
  return static_cast<std::size_t>(n);
}

std::optional<std::size_t> parse_count_or(std::string_view key, std::string_view v,
                                          std::string_view word) {
  if (v == word) return std::nullopt;
  return parse_positive(key, v);
}

double parse_rate(std::string_view key, std::string_view v) {
  const std::string s(v);
  std::size_t used = 0;
  double out = 0.0;
  try {
    out = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size() || !std::isfinite(out) || out <= 0.0) {
    throw ConfigError(std::string(key) + ": expected a positive number, got '" + s + "'");
  }
  return out;
}

std::vector<ActivationKind> parse_activation_list(std::string_view v) {
  if (v == "all") return {kAllActivations.begin(), kAllActivations.end()};
  std::vector<ActivationKind> out;
  while (!v.empty()) {
    const auto comma = v.find(',');
    const std::string_view item = trim(v.substr(0, comma));
    const auto act = parse_activation(item);
    if (!act) throw ConfigError("unknown activation '" + std::string(item) + "'");
    if (std::find(out.begin(), out.end(), *act) == out.end()) out.push_back(*act);
    if (comma == std::string_view::npos) break;
    v.remove_prefix(comma + 1);
  }
  if (out.empty()) throw ConfigError("activations: empty list");
  return out;
}

}  // namespace

void apply_setting(ExperimentConfig& cfg, std::string_view raw_key, std::string_view raw_value) {
  const std::string key = normalize_key(raw_key);
  const std::string_view v = trim(raw_value);
  if (key == "benchmark") {
    const auto b = parse_benchmark(v);
    if (!b) throw ConfigError("unknown benchmark '" + std::string(v) + "'");
    cfg.benchmark = *b;
  } else if (key == "activations" || key == "activation") {
    cfg.activations = parse_activation_list(v);
  } else if (key == "epochs") {
    cfg.epochs = parse_count_or(key, v, "default");
  } else if (key == "train_n") {
    cfg.train_n = parse_count_or(key, v, "full");
  } else if (key == "test_n") {
    cfg.test_n = parse_count_or(key, v, "full");
  } else if (key == "seed") {
    cfg.seed = parse_u64(key, v);
  } else if (key == "data_dir") {
    cfg.data_dir = std::string(v);
  } else if (key == "out") {
    cfg.out = std::string(v);
  } else if (key == "format") {
    if (v == "csv") {
      cfg.format = ReportFormat::Csv;
    } else if (v == "markdown" || v == "md") {
      cfg.format = ReportFormat::Markdown;
    } else {
      throw ConfigError("format must be csv or markdown, got '" + std::string(v) + "'");
    }
  } else if (key == "batch_size") {
    cfg.batch_size = parse_positive(key, v);
  } else if (key == "vocab") {
    cfg.vocab = parse_positive(key, v);
  } else if (key == "jobs") {
    cfg.jobs = parse_positive(key, v);
  } else if (key == "optimizer") {
    if (v == "adam") {
      cfg.optimizer = AdamConfig{};
    } else if (v == "sgd") {
      cfg.optimizer = SgdConfig{};
    } else {
      throw ConfigError("optimizer must be adam or sgd, got '" + std::string(v) + "'");
    }
  } else if (key == "learning_rate" || key == "lr") {
    const double lr = parse_rate(key, v);
    std::visit([lr](auto& o) { o.learning_rate = lr; }, cfg.optimizer);
  } else {
    throw ConfigError("unknown setting '" + key + "'");
  }
}

ExperimentConfig parse_run_config(std::istream& in, ExperimentConfig base) {
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::string_view s(line);
    if (const auto hash = s.find('#'); hash != std::string_view::npos) s = s.substr(0, hash);
    s = trim(s);
    if (s.empty()) continue;
    const auto eq = s.find('=');
    try {
      if (eq == std::string_view::npos) throw ConfigError("expected 'key = value'");
      apply_setting(base, s.substr(0, eq), s.substr(eq + 1));
    } catch (const ConfigError& e) {
      throw ConfigError("line " + std::to_string(number) + ": " + e.what());
    }
  }
  return base;
}

}  // namespace hsnet
