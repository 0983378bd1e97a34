#include <benchmark/benchmark.h>

#include <random>

#include "qmagic/catalog.hpp"
#include "qmagic/distillation.hpp"
#include "qmagic/extent.hpp"
#include "qmagic/measures.hpp"

using namespace qmagic;

namespace {

PureState random_state(const PrimeDim& dims, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  CVector v(dims.hilbert());
  for (auto& z : v) z = cplx(g(rng), g(rng));
  return PureState(dims, v);
}

void BM_Dictionary(benchmark::State& state) {
  const PrimeDim dims(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) {
    StabilizerDictionary dict(dims);
    benchmark::DoNotOptimize(dict.size());
  }
}
BENCHMARK(BM_Dictionary)->Args({2, 3})->Args({3, 2})->Args({5, 1})->Unit(benchmark::kMillisecond);

void BM_Fidelity(benchmark::State& state) {
  const PrimeDim dims(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  const auto psi = random_state(dims, 7);
  const auto& dict = stabilizer_dictionary(dims);
  for (auto _ : state) benchmark::DoNotOptimize(max_overlap(psi, dict).value);
}
BENCHMARK(BM_Fidelity)->Args({2, 3})->Args({3, 2})->Args({5, 1});

void BM_Sre(benchmark::State& state) {
  const auto psi = random_state(PrimeDim(3, 2), 3);
  for (auto _ : state) benchmark::DoNotOptimize(sre(psi, 2));
}
BENCHMARK(BM_Sre);

void BM_DistillStep(benchmark::State& state) {
  const PairParams p{0.01, 0.02, 0.03, 0.001, -0.002};
  for (auto _ : state) benchmark::DoNotOptimize(distill_step(p).p_success);
}
BENCHMARK(BM_DistillStep)->Unit(benchmark::kMillisecond);

void BM_SolveExtent(benchmark::State& state) {
  const PrimeDim dims(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  const auto problem = ExtentProblem::stabilizer(random_state(dims, 11));
  for (auto _ : state) benchmark::DoNotOptimize(solve_extent(problem).value);
}
BENCHMARK(BM_SolveExtent)->Args({3, 1})->Args({2, 2})->Args({5, 1})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
