#include <vector>

#include <benchmark/benchmark.h>

#include "noisyclimb/exploration.hpp"
#include "noisyclimb/td_targets.hpp"

namespace noisyclimb {
namespace {

void BM_OUStep(benchmark::State& state) {
  OUProcess p(0.15, 0.0, 0.2, 1.0);
  Rng rng(3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(p.step(rng));
  }
}
BENCHMARK(BM_OUStep);

void BM_OverestimationBias(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const std::vector<double> q(n, 0.0);
  Rng rng(5);
  constexpr std::size_t kTrials = 10000;
  for (auto _ : state) {
    benchmark::DoNotOptimize(overestimation_bias_experiment(n, 1.0, q, kTrials, rng));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(kTrials * n));
}
BENCHMARK(BM_OverestimationBias)->Arg(2)->Arg(10)->Arg(50);

void BM_DoubleDqnTarget(benchmark::State& state) {
  std::vector<double> cur(18), tgt(18);
  Rng rng(8);
  for (std::size_t k = 0; k < cur.size(); ++k) {
    cur[k] = uniform01(rng);
    tgt[k] = uniform01(rng);
  }
  const TargetParams p{1.0, 0.99};
  for (auto _ : state) {
    benchmark::DoNotOptimize(double_dqn_target(p, cur, tgt));
  }
}
BENCHMARK(BM_DoubleDqnTarget);

}  // namespace
}  // namespace noisyclimb
