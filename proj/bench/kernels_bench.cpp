// Serial reference vs OpenMP kernels on the same inputs.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "zhegalkin/anf.hpp"
#include "zhegalkin/kernels.hpp"

namespace {

using namespace zhegalkin;

std::vector<Digit> random_cells(Digit k, std::size_t count) {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<Digit> d(0, k - 1);
  std::vector<Digit> v(count);
  for (auto& x : v) x = d(rng);
  return v;
}

std::vector<kernels::PackedGate> random_gates(unsigned width, std::size_t count) {
  std::mt19937_64 rng(7);
  std::vector<kernels::PackedGate> gates;
  for (std::size_t i = 0; i < count; ++i) {
    const unsigned t = rng() % width;
    const std::uint64_t all = (std::uint64_t{1} << width) - 1;
    gates.push_back({rng() & rng() & all & ~(std::uint64_t{1} << t), std::uint64_t{1} << t});
  }
  return gates;
}

// args: k, n
template <auto Kernel>
void axis_transform(benchmark::State& state) {
  const Modulus k(state.range(0));
  const auto n = static_cast<std::size_t>(state.range(1));
  const auto p = build_transform_pair(k).p;
  const auto original = random_cells(k.value(), checked_power(k.value(), n, kMaxGridRows));
  auto cells = original;
  for (auto _ : state) {
    cells = original;
    Kernel(cells, k, n, 1, p.entries());
    benchmark::DoNotOptimize(cells.data());
  }
  state.SetItemsProcessed(state.iterations() * original.size());
}

// args: k, n (m = 1)
template <auto Kernel>
void block_permutation(benchmark::State& state) {
  const Modulus k(state.range(0));
  const auto n = static_cast<std::size_t>(state.range(1));
  const auto cells = random_cells(k.value(), checked_power(k.value(), n, kMaxGridRows));
  std::vector<std::uint64_t> image(cells.size() * k.value());
  for (auto _ : state) {
    Kernel(cells, k, 1, image);
    benchmark::DoNotOptimize(image.data());
  }
  state.SetItemsProcessed(state.iterations() * image.size());
}

// args: width
template <auto Kernel>
void circuit_outputs(benchmark::State& state) {
  const auto width = static_cast<unsigned>(state.range(0));
  const auto gates = random_gates(width, 64);
  const unsigned m = 4;
  std::vector<std::uint64_t> outputs(std::uint64_t{1} << (width - m));
  for (auto _ : state) {
    Kernel(gates, m, outputs);
    benchmark::DoNotOptimize(outputs.data());
  }
  state.SetItemsProcessed(state.iterations() * outputs.size());
}

void transform_args(benchmark::internal::Benchmark* b) {
  b->Args({2, 20})->Args({3, 12})->Args({5, 8})->Args({7, 7})->Unit(benchmark::kMillisecond);
}

BENCHMARK(axis_transform<kernels::serial::axis_transform>)->Apply(transform_args);
BENCHMARK(axis_transform<kernels::omp::axis_transform>)->Apply(transform_args);
BENCHMARK(block_permutation<kernels::serial::block_permutation>)
    ->Args({2, 20})->Args({3, 12})->Unit(benchmark::kMillisecond);
BENCHMARK(block_permutation<kernels::omp::block_permutation>)
    ->Args({2, 20})->Args({3, 12})->Unit(benchmark::kMillisecond);
BENCHMARK(circuit_outputs<kernels::serial::circuit_outputs>)
    ->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);
BENCHMARK(circuit_outputs<kernels::omp::circuit_outputs>)
    ->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
