#include <benchmark/benchmark.h>

#include <vector>

#include "hsnet/activation.hpp"
#include "hsnet/kernels.hpp"
#include "hsnet/rng.hpp"
#include "hsnet/tensor.hpp"

using namespace hsnet;

namespace {

std::vector<double> random_values(std::size_t n, std::uint64_t seed, double zero_fraction = 0.0) {
  Rng rng(seed);
  std::vector<double> v(n);
  for (double& x : v) x = rng.uniform01() < zero_fraction ? 0.0 : rng.uniform(-1.0, 1.0);
  return v;
}

}  // namespace

// Square products; items are multiply-adds.
static void BM_GemmNN(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_values(n * n, 1);
  const auto b = random_values(n * n, 2);
  std::vector<double> c(n * n);
  for (auto _ : state) {
    kernels::gemm_nn(a, b, c, n, n, n, false);
    benchmark::DoNotOptimize(c.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(n * n * n));
}
BENCHMARK(BM_GemmNN)->RangeMultiplier(2)->Range(32, 256);

static void BM_GemmTN(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_values(n * n, 3);
  const auto b = random_values(n * n, 4);
  std::vector<double> c(n * n);
  for (auto _ : state) {
    kernels::gemm_tn(a, b, c, n, n, n, false);
    benchmark::DoNotOptimize(c.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(n * n * n));
}
BENCHMARK(BM_GemmTN)->RangeMultiplier(2)->Range(32, 256);

static void BM_GemmNT(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_values(n * n, 5);
  const auto b = random_values(n * n, 6);
  std::vector<double> c(n * n);
  for (auto _ : state) {
    kernels::gemm_nt(a, b, c, n, n, n, false);
    benchmark::DoNotOptimize(c.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(n * n * n));
}
BENCHMARK(BM_GemmNT)->RangeMultiplier(2)->Range(32, 256);

// Bag-of-words shaped product: 32 x 10000 multi-hot rows times 10000 x 512.
static void BM_GemmSparseLeft(benchmark::State& state) {
  const double zero_fraction = static_cast<double>(state.range(0)) / 100.0;
  constexpr std::size_t m = 32, k = 10000, n = 512;
  const auto a = random_values(m * k, 7, zero_fraction);
  const auto b = random_values(k * n, 8);
  std::vector<double> c(m * n);
  for (auto _ : state) {
    kernels::gemm_nn(a, b, c, m, k, n, false);
    benchmark::DoNotOptimize(c.data());
  }
}
BENCHMARK(BM_GemmSparseLeft)->Arg(0)->Arg(90)->Arg(99)->Unit(benchmark::kMillisecond);

static void BM_Transpose(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto in = random_values(n * n, 9);
  std::vector<double> out(n * n);
  for (auto _ : state) {
    kernels::transpose(in, out, n, n);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetBytesProcessed(state.iterations() * static_cast<int64_t>(n * n * sizeof(double)));
}
BENCHMARK(BM_Transpose)->Arg(256)->Arg(1024);

static void BM_ActMap(benchmark::State& state) {
  const auto kind = static_cast<ActivationKind>(state.range(0));
  Rng rng(10);
  const Tensor pre = seeded_uniform(rng, {32, 26, 26, 32}, -4.0, 4.0);
  for (auto _ : state) {
    Tensor out = act_map(kind, pre);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetLabel(std::string(activation_name(kind)));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(pre.size()));
}
BENCHMARK(BM_ActMap)->DenseRange(0, 3);
