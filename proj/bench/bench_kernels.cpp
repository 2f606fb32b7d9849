// Serial reference vs OpenMP kernels: sampled rank/signature checks and exact products.

#include "rhspaces/kernels.hpp"
#include "rhspaces/spaces.hpp"
#include "rhspaces/verifier.hpp"

#include <benchmark/benchmark.h>

using namespace rhspaces;

namespace {

template <typename T>
std::vector<std::vector<Rational>> samples_for(const MatrixSpace<T>& space, std::size_t count) {
  std::vector<std::vector<Rational>> out;
  for (const auto& v : sample_coefficients(space.dimension(), count, 0)) out.emplace_back(v.begin(), v.end());
  return out;
}

template <typename T>
void evaluate(benchmark::State& state, Execution execution) {
  const auto space = build_space<T>(static_cast<std::size_t>(state.range(0)), 0);
  const auto coefficients = samples_for(space, 32);
  for (auto _ : state) {
    benchmark::DoNotOptimize(evaluate_samples<T>(space.basis, coefficients, true, execution));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(coefficients.size()));
  state.counters["threads"] = execution == Execution::parallel ? kernel_threads() : 1;
}

void BM_EvaluateRealSerial(benchmark::State& s) { evaluate<Rational>(s, Execution::serial); }
void BM_EvaluateRealParallel(benchmark::State& s) { evaluate<Rational>(s, Execution::parallel); }
void BM_EvaluateComplexSerial(benchmark::State& s) { evaluate<GaussianRational>(s, Execution::serial); }
void BM_EvaluateComplexParallel(benchmark::State& s) { evaluate<GaussianRational>(s, Execution::parallel); }

RealMatrix dense(std::size_t n) {
  RealMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational x(static_cast<long>((i * 7 + j * 3) % 11) - 5, 1 + (i + j) % 3);
      x.canonicalize();
      m(i, j) = x;
    }
  return m;
}

void BM_MulSerial(benchmark::State& state) {
  const RealMatrix a = dense(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(a * a);
}

void BM_MulParallel(benchmark::State& state) {
  const RealMatrix a = dense(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mul_parallel(a, a));
}

}  // namespace

BENCHMARK(BM_EvaluateRealSerial)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EvaluateRealParallel)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EvaluateComplexSerial)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EvaluateComplexParallel)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MulSerial)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MulParallel)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
