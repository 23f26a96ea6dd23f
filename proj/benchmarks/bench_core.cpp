#include <benchmark/benchmark.h>

#include "gossez/checks.hpp"
#include "gossez/fitzpatrick.hpp"
#include "gossez/operator_g.hpp"
#include "gossez/probes.hpp"

using namespace gossez;

namespace {

SparseSeq dense(Index n) {
  Rng rng(n);
  return random_sparse(rng, SeqShape{.max_index = n, .max_support = n, .bound = 1000});
}

void BM_ApplyG(benchmark::State& state) {
  const SparseSeq x = dense(static_cast<Index>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(apply_G(x));
}
BENCHMARK(BM_ApplyG)->RangeMultiplier(4)->Range(16, 1024);

void BM_SolveG(benchmark::State& state) {
  const TailSeq y = apply_G(dense(static_cast<Index>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(solve_G(y));
}
BENCHMARK(BM_SolveG)->RangeMultiplier(4)->Range(16, 1024);

void BM_FitzSampled(benchmark::State& state) {
  Rng rng(1);
  const SeqShape shape{.max_index = 32, .max_support = 8, .bound = 1000};
  const SampledGraph g = sample_graph_G(DualSystem::First, rng, static_cast<std::size_t>(state.range(0)), shape);
  const PairPoint z = PairPoint::first(random_sparse(rng, shape), random_tail(rng, shape, false));
  for (auto _ : state) benchmark::DoNotOptimize(fitz_sampled(z, g));
}
BENCHMARK(BM_FitzSampled)->Range(8, 512);

void BM_Annihilator(benchmark::State& state) {
  const auto n = static_cast<Index>(state.range(0));
  std::vector<PairPoint> spanning;
  for (Index k = 1; k <= n; ++k) {
    spanning.push_back(PairPoint::first(SparseSeq::unit(k), apply_G(SparseSeq::unit(k))));
  }
  for (auto _ : state) benchmark::DoNotOptimize(annihilator_truncated(spanning, n, DualSystem::First));
}
BENCHMARK(BM_Annihilator)->DenseRange(8, 32, 8);

void BM_FullSuiteSmall(benchmark::State& state) {
  CheckConfig cfg;
  cfg.truncation = 16;
  cfg.trials = 100;
  for (auto _ : state) benchmark::DoNotOptimize(run_checks(cfg));
}
BENCHMARK(BM_FullSuiteSmall)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
