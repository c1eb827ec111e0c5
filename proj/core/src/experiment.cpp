#include "noisyclimb/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <thread>

namespace noisyclimb {

bool RunSummary::same_outcome(const RunSummary& other) const {
  return seed == other.seed && solved_at == other.solved_at &&
         final_avg100 == other.final_avg100 && episodes_run == other.episodes_run;
}

RunResult run_training(const CartpoleConfig& env, const ClimbConfig& climb_config) {
  const auto start = std::chrono::steady_clock::now();
  RunResult result;
  result.training = climb(env, climb_config);
  const auto stop = std::chrono::steady_clock::now();

  const TrainingLog& log = result.training.log;
  result.summary.seed = climb_config.seed;
  result.summary.solved_at = log.solved_at;
  result.summary.episodes_run = static_cast<int>(log.records.size());
  result.summary.final_avg100 = log.records.empty() ? 0.0 : log.records.back().avg100;
  result.summary.wall_time = std::chrono::duration<double>(stop - start).count();
  return result;
}

std::vector<RunResult> run_sweep(const CartpoleConfig& env, const ClimbConfig& climb_config,
                                 std::uint64_t base_seed, std::size_t count, unsigned workers) {
  env.validate();
  climb_config.validate();

  std::vector<RunResult> results(count);
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(count, 1)));

  // Each slot is written by exactly one worker; seeds are claimed in order.
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(workers);
  auto work = [&](unsigned worker) {
    try {
      for (std::size_t i = next++; i < count; i = next++) {
        ClimbConfig run_config = climb_config;
        run_config.seed = base_seed + i;
        results[i] = run_training(env, run_config);
      }
    } catch (...) {
      errors[worker] = std::current_exception();
    }
  };

  if (workers <= 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

SweepSummary summarize(std::vector<RunSummary> runs) {
  SweepSummary summary;
  summary.runs = std::move(runs);

  std::vector<int> solved;
  for (const RunSummary& r : summary.runs) {
    if (r.solved_at) solved.push_back(*r.solved_at);
  }
  if (!summary.runs.empty()) {
    summary.solve_rate =
        static_cast<double>(solved.size()) / static_cast<double>(summary.runs.size());
  }
  if (!solved.empty()) {
    std::sort(solved.begin(), solved.end());
    const std::size_t mid = solved.size() / 2;
    summary.median_solved_at = solved.size() % 2 == 1
                                   ? static_cast<double>(solved[mid])
                                   : 0.5 * (static_cast<double>(solved[mid - 1]) +
                                            static_cast<double>(solved[mid]));
  }
  return summary;
}

}  // namespace noisyclimb
