#ifndef NOISYCLIMB_EXPERIMENT_HPP_
#define NOISYCLIMB_EXPERIMENT_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "noisyclimb/cartpole.hpp"
#include "noisyclimb/hillclimb.hpp"

namespace noisyclimb {

struct RunSummary {
  std::uint64_t seed = 0;
  std::optional<int> solved_at;
  double final_avg100 = 0.0;
  int episodes_run = 0;
  double wall_time = 0.0;  // seconds; the only non-reproducible field

  // Equality over the reproducible fields (everything but wall_time).
  bool same_outcome(const RunSummary& other) const;
};

struct RunResult {
  RunSummary summary;
  TrainingResult training;
};

struct SweepSummary {
  std::vector<RunSummary> runs;
  std::optional<double> median_solved_at;  // over solved runs only
  double solve_rate = 0.0;
};

RunResult run_training(const CartpoleConfig& env, const ClimbConfig& climb);

// Trains seeds base_seed, base_seed + 1, ..., base_seed + count - 1 on up to
// `workers` threads (0 = hardware concurrency). Results are ordered by seed
// and do not depend on the worker count.
std::vector<RunResult> run_sweep(const CartpoleConfig& env, const ClimbConfig& climb,
                                 std::uint64_t base_seed, std::size_t count,
                                 unsigned workers = 0);

SweepSummary summarize(std::vector<RunSummary> runs);

}  // namespace noisyclimb

#endif  // NOISYCLIMB_EXPERIMENT_HPP_
