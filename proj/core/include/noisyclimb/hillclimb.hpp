#ifndef NOISYCLIMB_HILLCLIMB_HPP_
#define NOISYCLIMB_HILLCLIMB_HPP_

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <vector>

#include "noisyclimb/cartpole.hpp"
#include "noisyclimb/policy.hpp"
#include "noisyclimb/random.hpp"

namespace noisyclimb {

struct ClimbConfig {
  double gamma = 1.0;
  double noise_init = 1e-2;
  double noise_min = 1e-3;
  double noise_max = 2.0;
  double scale_factor = 2.0;
  int max_episodes = 2000;
  std::uint64_t seed = 0;

  // Throws InvalidConfigError if any invariant is violated.
  void validate() const;

  friend bool operator==(const ClimbConfig&, const ClimbConfig&) = default;
};

struct ClimbState {
  WeightMatrix best_w;
  double best_return = -std::numeric_limits<double>::infinity();
  double noise_scale = 0.0;
  int episode = 0;
};

struct EpisodeRecord {
  int episode = 0;     // 1-based
  double score = 0.0;  // undiscounted episode reward
  double g0 = 0.0;     // discounted return used for acceptance
  double avg100 = 0.0; // mean score over the last min(100, episode) episodes
  double noise_scale = 0.0;  // after the update for this episode

  friend bool operator==(const EpisodeRecord&, const EpisodeRecord&) = default;
};

struct TrainingLog {
  std::vector<EpisodeRecord> records;
  std::optional<int> solved_at;

  friend bool operator==(const TrainingLog&, const TrainingLog&) = default;
};

struct TrainingResult {
  TrainingLog log;
  ClimbState final_state;
};

// best_w + noise_scale * E with E_ij ~ U[0, 1) drawn independently.
WeightMatrix perturb(const WeightMatrix& best_w, double noise_scale, Rng& rng);

// Accepts the candidate when candidate_return >= best_return and shrinks
// the noise scale by scale_factor; otherwise keeps the best and grows it.
// The scale is clamped to [noise_min, noise_max].
ClimbState update(const ClimbState& state, const WeightMatrix& candidate_w,
                  double candidate_return, const ClimbConfig& config);

// Rewards of a single greedy rollout; the environment is reset from `rng`.
std::vector<double> run_episode(const CartpoleConfig& env, const WeightMatrix& w, Rng& rng);

// Runs one candidate per episode until the environment is solved or
// max_episodes is reached. Fully determined by the two configs.
TrainingResult climb(const CartpoleConfig& env, const ClimbConfig& config);

inline TrainingLog train(const CartpoleConfig& env, const ClimbConfig& config) {
  return climb(env, config).log;
}

inline constexpr const char* kTrainingLogHeader = "episode,score,g0,avg100,noise_scale";

// One header line plus one row per episode, shortest round-trip decimals.
void write_csv(std::ostream& out, const TrainingLog& log);

}  // namespace noisyclimb

#endif  // NOISYCLIMB_HILLCLIMB_HPP_
