#include <benchmark/benchmark.h>

#include "noisyclimb/cartpole.hpp"
#include "noisyclimb/hillclimb.hpp"
#include "noisyclimb/policy.hpp"

namespace noisyclimb {
namespace {

void BM_CartpoleStep(benchmark::State& state) {
  const CartpoleConfig config;
  CartpoleState s{0.01, -0.02, 0.03, 0.01};
  for (auto _ : state) {
    StepResult r = step(config, s, Action::Right, 0);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_CartpoleStep);

void BM_PolicyAct(benchmark::State& state) {
  const WeightMatrix w({0.1, -0.2, 0.3, -0.4, 0.5, -0.6, 0.7, -0.8});
  const CartpoleState s{0.01, -0.02, 0.03, 0.01};
  for (auto _ : state) {
    benchmark::DoNotOptimize(act(w, s));
  }
}
BENCHMARK(BM_PolicyAct);

void BM_Episode(benchmark::State& state) {
  const CartpoleConfig config = preset(CartpoleVariant::V1);
  // A balancing controller so that episodes run to the step limit.
  WeightMatrix w;
  w(2, 1) = 1.0;
  w(3, 1) = 1.0;
  Rng rng(1);
  std::int64_t steps = 0;
  for (auto _ : state) {
    const auto rewards = run_episode(config, w, rng);
    steps += static_cast<std::int64_t>(rewards.size());
  }
  state.SetItemsProcessed(steps);
}
BENCHMARK(BM_Episode);

void BM_TrainV0(benchmark::State& state) {
  ClimbConfig c;
  for (auto _ : state) {
    c.seed++;
    benchmark::DoNotOptimize(train(CartpoleConfig{}, c));
  }
}
BENCHMARK(BM_TrainV0)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace noisyclimb
