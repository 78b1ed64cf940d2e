#include "hsnet/experiment.hpp"

#include <array>
#include <future>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "hsnet/errors.hpp"
#include "hsnet/network.hpp"

namespace hsnet {
namespace {

struct BenchmarkInfo {
  Benchmark id;
  std::string_view name;
  std::string_view classifier;
  std::size_t epochs;
  std::size_t classes;
};

constexpr std::array<BenchmarkInfo, 5> kBenchmarks = {{
    {Benchmark::Cifar10, "cifar10", "CNN", 10, 10},
    {Benchmark::FashionMnist, "fashion_mnist", "FC-NN", 20, 10},
    {Benchmark::Mnist, "mnist", "CNN", 15, 10},
    {Benchmark::Reuters, "reuters", "FC-NN", 3, 46},
    {Benchmark::Imdb, "imdb", "FC-NN", 3, 2},
}};

const BenchmarkInfo& info(Benchmark b) {
  for (const auto& i : kBenchmarks) {
    if (i.id == b) return i;
  }
  return kBenchmarks.front();
}

std::filesystem::path require(const std::filesystem::path& p) {
  if (!std::filesystem::exists(p)) throw IoError("missing data file " + p.string());
  return p;
}

LabeledDataset load_idx_split(const std::filesystem::path& dir, const std::string& prefix) {
  return load_idx(require(dir / (prefix + "-images-idx3-ubyte")),
                  require(dir / (prefix + "-labels-idx1-ubyte")));
}

struct SplitView {
  const LabeledDataset& train;
  const LabeledDataset& test;
};

ReportRow train_one(const ExperimentConfig& cfg, SplitView data, ActivationKind act,
                    std::ostream& log) {
  ModelConfig model = build_model(cfg.benchmark, act);
  if (cfg.benchmark == Benchmark::Reuters || cfg.benchmark == Benchmark::Imdb) {
    model.input_shape = {cfg.vocab};
  }
  model.epochs = cfg.epochs.value_or(default_epochs(cfg.benchmark));
  model.batch_size = cfg.batch_size;
  model.optimizer = cfg.optimizer;
  model.seed = cfg.seed;

  ReportRow row;
  row.benchmark = std::string(benchmark_name(cfg.benchmark));
  row.classifier = std::string(classifier_name(cfg.benchmark));
  row.activation = std::string(activation_name(act));
  row.epochs = model.epochs;
  row.train_samples = data.train.size();
  row.test_samples = data.test.size();

  const std::string tag = "[" + row.benchmark + "/" + row.activation + "] ";
  auto on_epoch = [&](std::size_t epoch, const TrainHistory& h) {
    std::ostringstream os;
    os << tag << "epoch " << (epoch + 1) << "/" << model.epochs << std::fixed
       << std::setprecision(4) << " loss=" << h.loss.back() << " acc=" << h.accuracy.back()
       << std::setprecision(3) << " max|pre|=" << h.max_abs_preactivation.back()
       << std::setprecision(1) << " (" << h.seconds.back() << "s)\n";
    log << os.str() << std::flush;
  };

  Rng rng(model.seed);
  try {
    TrainResult result = train(model, data.train, rng, on_epoch);
    row.history = std::move(result.history);
    const std::vector<int> pred = predict(result.network, data.test);
    row.eval = classification_report(confusion(data.test.labels(), pred, data.test.num_classes()));
    std::ostringstream os;
    os << tag << std::fixed << std::setprecision(4) << "test accuracy=" << row.eval->accuracy
       << " weighted_f1=" << row.eval->weighted_f1 << "\n";
    log << os.str();
  } catch (const NumericDivergence& e) {
    row.failure = e.what();
    log << tag << "diverged: " << e.what() << "\n";
  }
  return row;
}

}  // namespace

std::string_view benchmark_name(Benchmark b) noexcept { return info(b).name; }

std::optional<Benchmark> parse_benchmark(std::string_view name) noexcept {
  for (const auto& i : kBenchmarks) {
    if (i.name == name) return i.id;
  }
  return std::nullopt;
}

std::string_view classifier_name(Benchmark b) noexcept { return info(b).classifier; }
std::size_t default_epochs(Benchmark b) noexcept { return info(b).epochs; }
std::size_t benchmark_classes(Benchmark b) noexcept { return info(b).classes; }

void validate(const ExperimentConfig& cfg) {
  if (cfg.activations.empty()) throw ConfigError("no activations selected");
  if (cfg.epochs && *cfg.epochs == 0) throw ConfigError("epochs must be positive");
  if (cfg.train_n && *cfg.train_n == 0) throw ConfigError("train_n must be positive or 'full'");
  if (cfg.test_n && *cfg.test_n == 0) throw ConfigError("test_n must be positive or 'full'");
  if (cfg.batch_size == 0) throw ConfigError("batch_size must be positive");
  if (cfg.vocab == 0) throw ConfigError("vocab must be positive");
  if (cfg.jobs == 0) throw ConfigError("jobs must be positive");
  const double lr = std::visit([](const auto& o) { return o.learning_rate; }, cfg.optimizer);
  if (!(lr > 0.0)) throw ConfigError("learning rate must be positive");
}

ModelConfig build_cifar10_cnn(ActivationKind act) {
  ModelConfig m;
  m.input_shape = {32, 32, 3};
  m.num_classes = 10;
  m.epochs = default_epochs(Benchmark::Cifar10);
  m.layers = {
      Conv2DSpec{32, 3, act}, MaxPool2DSpec{},        Conv2DSpec{64, 3, act},
      MaxPool2DSpec{},        Conv2DSpec{64, 3, act}, FlattenSpec{},
      DenseSpec{64, ActivationKind::Relu, false},     DenseSpec{10, std::nullopt, false},
  };
  return m;
}

ModelConfig build_fashion_fcnn(ActivationKind act) {
  ModelConfig m;
  m.input_shape = {28, 28, 1};
  m.num_classes = 10;
  m.epochs = default_epochs(Benchmark::FashionMnist);
  m.layers = {FlattenSpec{}, DenseSpec{128, act, false}, DenseSpec{10, std::nullopt, false}};
  return m;
}

ModelConfig build_mnist_cnn(ActivationKind act) {
  ModelConfig m;
  m.input_shape = {28, 28, 1};
  m.num_classes = 10;
  m.epochs = default_epochs(Benchmark::Mnist);
  m.layers = {
      Conv2DSpec{32, 3, act}, MaxPool2DSpec{}, Conv2DSpec{64, 3, act}, MaxPool2DSpec{},
      FlattenSpec{},          DropoutSpec{0.5}, DenseSpec{10, std::nullopt, true},
  };
  return m;
}

ModelConfig build_text_fcnn(ActivationKind act, std::size_t num_classes) {
  if (num_classes < 2) throw ConfigError("text classifier needs at least 2 classes");
  ModelConfig m;
  m.input_shape = {kTextVocab};
  m.num_classes = num_classes;
  m.epochs = default_epochs(Benchmark::Reuters);
  m.layers = {DenseSpec{512, act, false}, DropoutSpec{0.5}, DenseSpec{num_classes, std::nullopt, true}};
  return m;
}

ModelConfig build_model(Benchmark b, ActivationKind act) {
  switch (b) {
    case Benchmark::Cifar10: return build_cifar10_cnn(act);
    case Benchmark::FashionMnist: return build_fashion_fcnn(act);
    case Benchmark::Mnist: return build_mnist_cnn(act);
    case Benchmark::Reuters: return build_text_fcnn(act, benchmark_classes(b));
    case Benchmark::Imdb: return build_text_fcnn(act, benchmark_classes(b));
  }
  throw ConfigError("unknown benchmark");
}

BenchmarkData load_benchmark(Benchmark b, const std::filesystem::path& data_dir,
                             std::size_t vocab) {
  const std::string name(benchmark_name(b));
  const std::filesystem::path dir = data_dir / name;
  switch (b) {
    case Benchmark::Mnist:
    case Benchmark::FashionMnist:
      return {load_idx_split(dir, "train"), load_idx_split(dir, "t10k")};
    case Benchmark::Cifar10: {
      std::vector<std::filesystem::path> train_files;
      for (int i = 1; i <= 5; ++i) {
        train_files.push_back(require(dir / ("data_batch_" + std::to_string(i) + ".bin")));
      }
      const std::array<std::filesystem::path, 1> test_files{require(dir / "test_batch.bin")};
      return {load_cifar10(train_files), load_cifar10(test_files)};
    }
    case Benchmark::Reuters:
    case Benchmark::Imdb: {
      const std::size_t k = benchmark_classes(b);
      return {load_text_jsonl(require(dir / "train.jsonl"), vocab, k),
              load_text_jsonl(require(dir / "test.jsonl"), vocab, k)};
    }
  }
  throw ConfigError("unknown benchmark");
}

std::vector<ReportRow> run_experiment(const ExperimentConfig& cfg, std::ostream& log) {
  validate(cfg);
  const BenchmarkData data = load_benchmark(cfg.benchmark, cfg.data_dir, cfg.vocab);
  return run_experiment(cfg, data, log);
}

std::vector<ReportRow> run_experiment(const ExperimentConfig& cfg, const BenchmarkData& full,
                                      std::ostream& log) {
  validate(cfg);
  const Rng base(cfg.seed);
  Rng train_pick = base.fork(1);
  Rng test_pick = base.fork(2);
  std::optional<LabeledDataset> train_sub;
  std::optional<LabeledDataset> test_sub;
  if (cfg.train_n) train_sub = subset(full.train, *cfg.train_n, train_pick);
  if (cfg.test_n) test_sub = subset(full.test, *cfg.test_n, test_pick);
  const SplitView data{train_sub ? *train_sub : full.train, test_sub ? *test_sub : full.test};
  log << "[" << benchmark_name(cfg.benchmark) << "] train=" << data.train.size()
      << " test=" << data.test.size() << " seed=" << cfg.seed << "\n";

  std::vector<ReportRow> rows;
  if (cfg.jobs <= 1 || cfg.activations.size() == 1) {
    for (ActivationKind act : cfg.activations) rows.push_back(train_one(cfg, data, act, log));
    return rows;
  }

  // Concurrent variants log into private buffers, flushed in request order.
  std::vector<std::ostringstream> logs(cfg.activations.size());
  std::vector<std::future<ReportRow>> pending;
  std::size_t next = 0;
  rows.resize(cfg.activations.size());
  std::vector<std::size_t> slot;
  while (next < cfg.activations.size() || !pending.empty()) {
    while (next < cfg.activations.size() && pending.size() < cfg.jobs) {
      const std::size_t i = next++;
      slot.push_back(i);
      pending.push_back(std::async(std::launch::async, [&, i] {
        return train_one(cfg, data, cfg.activations[i], logs[i]);
      }));
    }
    rows[slot.front()] = pending.front().get();
    pending.erase(pending.begin());
    slot.erase(slot.begin());
  }
  for (const auto& l : logs) log << l.str();
  return rows;
}

}  // namespace hsnet
