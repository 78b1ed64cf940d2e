#include <benchmark/benchmark.h>

#include <numeric>
#include <vector>

#include "hsnet/experiment.hpp"
#include "hsnet/layers.hpp"
#include "hsnet/loss.hpp"
#include "hsnet/network.hpp"
#include "hsnet/optimizer.hpp"

using namespace hsnet;

// First MNIST convolution: 32 x 28x28x1 -> 26x26x32.
static void BM_ConvForward(benchmark::State& state) {
  Rng rng(1);
  Conv2DLayer conv(Conv2DSpec{32, 3, ActivationKind::HyperSinh}, {28, 28, 1}, rng);
  const Tensor x = seeded_uniform(rng, {32, 28, 28, 1}, 0.0, 1.0);
  for (auto _ : state) {
    Tensor y = conv.forward(x, Mode::Train, rng);
    benchmark::DoNotOptimize(y.data());
  }
  state.SetItemsProcessed(state.iterations() * 32);
}
BENCHMARK(BM_ConvForward)->Unit(benchmark::kMillisecond);

// Second MNIST convolution including the input gradient.
static void BM_ConvBackward(benchmark::State& state) {
  Rng rng(2);
  Conv2DLayer conv(Conv2DSpec{64, 3, ActivationKind::HyperSinh}, {13, 13, 32}, rng);
  const Tensor x = seeded_uniform(rng, {32, 13, 13, 32}, -1.0, 1.0);
  const Tensor g = seeded_uniform(rng, {32, 11, 11, 64}, -1.0, 1.0);
  (void)conv.forward(x, Mode::Train, rng);
  for (auto _ : state) {
    Tensor dx = conv.backward(g, true);
    benchmark::DoNotOptimize(dx.data());
  }
  state.SetItemsProcessed(state.iterations() * 32);
}
BENCHMARK(BM_ConvBackward)->Unit(benchmark::kMillisecond);

// One Adam step on a batch of 32 for each benchmark model.
static void BM_TrainStep(benchmark::State& state) {
  const auto bench = static_cast<Benchmark>(state.range(0));
  const ModelConfig model = build_model(bench, ActivationKind::HyperSinh);
  Rng rng(3);
  Network net(model, rng);
  Shape batch_shape{32};
  batch_shape.insert(batch_shape.end(), model.input_shape.begin(), model.input_shape.end());
  const Tensor x = seeded_uniform(rng, batch_shape, 0.0, 1.0);
  std::vector<int> y(32);
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = static_cast<int>(i % model.num_classes);
  const OptimizerConfig opt = AdamConfig{};
  for (auto _ : state) {
    const Tensor logits = net.forward(x, Mode::Train, rng);
    net.backward(softmax_cross_entropy(logits, y).grad_logits);
    for (Parameter* p : net.parameters()) optimizer_step(*p, opt);
  }
  state.SetLabel(std::string(benchmark_name(bench)));
  state.SetItemsProcessed(state.iterations() * 32);
}
BENCHMARK(BM_TrainStep)
    ->Arg(static_cast<int>(Benchmark::Cifar10))
    ->Arg(static_cast<int>(Benchmark::FashionMnist))
    ->Arg(static_cast<int>(Benchmark::Mnist))
    ->Unit(benchmark::kMillisecond);
