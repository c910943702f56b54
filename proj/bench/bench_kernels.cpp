// Serial reference kernels vs the OpenMP production kernels at the shapes the
// experiment architectures actually use.

#include <benchmark/benchmark.h>

#include "dropnet/kernels.hpp"
#include "dropnet/pooling.hpp"
#include "dropnet/random.hpp"
#include "dropnet/reference.hpp"

namespace {

using namespace dropnet;

struct ConvCase {
  Tensor input, filters, biases;
};

ConvCase make_conv(std::size_t maps_in, std::size_t maps_out, std::size_t side,
                   std::size_t filter) {
  RandomStream stream(42);
  ConvCase c{gaussian_init(stream, {maps_in, side, side}, 1.0),
             gaussian_init(stream, {maps_out, maps_in, filter, filter}, 0.1),
             gaussian_init(stream, {maps_out}, 0.1)};
  return c;
}

void bench_conv_forward_reference(benchmark::State& state) {
  const ConvCase c = make_conv(6, 12, 12, 5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(reference::conv2d_forward(c.input, c.filters, c.biases));
  }
}

void bench_conv_forward_parallel(benchmark::State& state) {
  const ConvCase c = make_conv(6, 12, 12, 5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::conv2d_forward(c.input, c.filters, c.biases));
  }
}

void bench_conv_backward_reference(benchmark::State& state) {
  const ConvCase c = make_conv(6, 12, 12, 5);
  const Tensor out = reference::conv2d_forward(c.input, c.filters, c.biases);
  for (auto _ : state) {
    benchmark::DoNotOptimize(reference::conv2d_backward(out, c.input, c.filters));
  }
}

void bench_conv_backward_parallel(benchmark::State& state) {
  const ConvCase c = make_conv(6, 12, 12, 5);
  const Tensor out = kernels::conv2d_forward(c.input, c.filters, c.biases);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::conv2d_backward(out, c.input, c.filters));
  }
}

void bench_fc_forward_reference(benchmark::State& state) {
  RandomStream stream(7);
  const Tensor input = gaussian_init(stream, {192}, 1.0);
  const Tensor weights = gaussian_init(stream, {1000, 192}, 0.1);
  const Tensor biases = gaussian_init(stream, {1000}, 0.1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(reference::fc_forward(input, weights, biases));
  }
}

void bench_fc_forward_parallel(benchmark::State& state) {
  RandomStream stream(7);
  const Tensor input = gaussian_init(stream, {192}, 1.0);
  const Tensor weights = gaussian_init(stream, {1000, 192}, 0.1);
  const Tensor biases = gaussian_init(stream, {1000}, 0.1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::fc_forward(input, weights, biases));
  }
}

void bench_prob_weighted_pool(benchmark::State& state) {
  RandomStream stream(9);
  Tensor input({12, 24, 24});
  for (Real& v : input.data) v = stream.uniform01();
  const PoolSpec spec{3, 2, TrainPooling::kMaxDropout, TestPooling::kProbWeighted, 0.5};
  for (auto _ : state) {
    benchmark::DoNotOptimize(prob_weighted_pool(input, spec));
  }
}

void bench_max_pool(benchmark::State& state) {
  RandomStream stream(9);
  Tensor input({12, 24, 24});
  for (Real& v : input.data) v = stream.uniform01();
  const PoolSpec spec{3, 2, TrainPooling::kMax, TestPooling::kMax, 0.5};
  for (auto _ : state) {
    benchmark::DoNotOptimize(max_pool(input, spec));
  }
}

BENCHMARK(bench_conv_forward_reference);
BENCHMARK(bench_conv_forward_parallel);
BENCHMARK(bench_conv_backward_reference);
BENCHMARK(bench_conv_backward_parallel);
BENCHMARK(bench_fc_forward_reference);
BENCHMARK(bench_fc_forward_parallel);
BENCHMARK(bench_max_pool);
BENCHMARK(bench_prob_weighted_pool);

}  // namespace

BENCHMARK_MAIN();
