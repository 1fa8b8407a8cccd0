// Serial reference kernels against their OpenMP counterparts.

#include <string>
#include <vector>

#include <benchmark/benchmark.h>

#include "ga/cli.hpp"
#include "ga/kernels.hpp"

namespace {

ga::Algebra skewed_algebra(int n) {
  // Non-diagonal so blade products go through Gram determinants.
  ga::Matrix g = ga::Matrix::identity(n);
  for (int i = 0; i + 1 < n; ++i)
    g(i, i + 1) = g(i + 1, i) = 0.25;
  return ga::make_algebra(ga::MetricTensor(g));
}

void cayley_serial(benchmark::State &state) {
  const auto a = skewed_algebra(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(ga::kernels::build_cayley_table_serial(a));
}

void cayley_parallel(benchmark::State &state) {
  const auto a = skewed_algebra(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(ga::kernels::build_cayley_table(a));
}

void gram_serial(benchmark::State &state) {
  const auto a = skewed_algebra(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(ga::kernels::blade_gram_matrix_serial(a));
}

void gram_parallel(benchmark::State &state) {
  const auto a = skewed_algebra(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(ga::kernels::blade_gram_matrix(a));
}

std::vector<std::string> batch_lines(int count) {
  std::vector<std::string> lines;
  for (int i = 0; i < count; ++i) {
    const std::string a = "e" + std::to_string(i % 5 + 1);
    const std::string b = "e" + std::to_string((i / 5) % 5 + 1);
    lines.push_back("(" + a + " + 2*" + b + ") * (e1^e2^e3 + " + a + ") << ~(" + b + "^e4)");
  }
  return lines;
}

void batch_serial(benchmark::State &state) {
  const ga::expr::Evaluator ev(skewed_algebra(5));
  const auto lines = batch_lines(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(
        ga::cli::evaluate_batch_serial(ev, lines, ga::expr::FormatMode::text));
}

void batch_parallel(benchmark::State &state) {
  const ga::expr::Evaluator ev(skewed_algebra(5));
  const auto lines = batch_lines(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(ga::cli::evaluate_batch(ev, lines, ga::expr::FormatMode::text));
}

} // namespace

BENCHMARK(cayley_serial)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);
BENCHMARK(cayley_parallel)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);
BENCHMARK(gram_serial)->DenseRange(4, 8)->Unit(benchmark::kMillisecond);
BENCHMARK(gram_parallel)->DenseRange(4, 8)->Unit(benchmark::kMillisecond);
BENCHMARK(batch_serial)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(batch_parallel)->Arg(256)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
