#include "noisyclimb/hillclimb.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <deque>
#include <numeric>
#include <ostream>
#include <string>

#include "noisyclimb/errors.hpp"
#include "noisyclimb/td_targets.hpp"

namespace noisyclimb {

namespace {

// Environment resets and weight perturbations draw from separate streams so
// that changing one consumer never shifts the other's sequence.
constexpr std::uint64_t kEnvStream = 0;
constexpr std::uint64_t kNoiseStream = 1;

void append_number(std::string& line, double value) {
  char buf[32];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  line.append(buf, end);
}

}  // namespace

void ClimbConfig::validate() const {
  if (!(gamma > 0.0 && gamma <= 1.0)) {
    throw InvalidConfigError("hillclimb: gamma must lie in (0, 1]");
  }
  if (!(noise_min > 0.0 && noise_min <= noise_init && noise_init <= noise_max) ||
      !std::isfinite(noise_max)) {
    throw InvalidConfigError("hillclimb: require 0 < noise_min <= noise_init <= noise_max");
  }
  if (!(scale_factor > 1.0) || !std::isfinite(scale_factor)) {
    throw InvalidConfigError("hillclimb: scale_factor must be > 1");
  }
  if (max_episodes < 0) {
    throw InvalidConfigError("hillclimb: max_episodes must be >= 0");
  }
}

WeightMatrix perturb(const WeightMatrix& best_w, double noise_scale, Rng& rng) {
  WeightMatrix out = best_w;
  for (double& v : out.values()) {
    v += noise_scale * uniform01(rng);
  }
  return out;
}

ClimbState update(const ClimbState& state, const WeightMatrix& candidate_w,
                  double candidate_return, const ClimbConfig& config) {
  ClimbState next = state;
  if (candidate_return >= state.best_return) {
    next.best_w = candidate_w;
    next.best_return = candidate_return;
    next.noise_scale = std::max(config.noise_min, state.noise_scale / config.scale_factor);
  } else {
    next.noise_scale = std::min(config.noise_max, state.noise_scale * config.scale_factor);
  }
  ++next.episode;
  return next;
}

std::vector<double> run_episode(const CartpoleConfig& env, const WeightMatrix& w, Rng& rng) {
  std::vector<double> rewards;
  rewards.reserve(static_cast<std::size_t>(env.max_episode_steps));
  CartpoleState state = reset(env, rng);
  for (int t = 0; t < env.max_episode_steps; ++t) {
    const StepResult r = step(env, state, act(w, state), t);
    rewards.push_back(r.reward);
    state = r.state;
    if (r.done) break;
  }
  return rewards;
}

TrainingResult climb(const CartpoleConfig& env, const ClimbConfig& config) {
  env.validate();
  config.validate();

  Rng env_rng = make_stream(config.seed, kEnvStream);
  Rng noise_rng = make_stream(config.seed, kNoiseStream);

  TrainingResult result;
  ClimbState& state = result.final_state;
  state.noise_scale = config.noise_init;
  state.best_w = perturb(WeightMatrix{}, config.noise_init, noise_rng);

  std::vector<double> scores;
  scores.reserve(static_cast<std::size_t>(config.max_episodes));
  std::deque<double> window;
  double window_sum = 0.0;

  WeightMatrix candidate = state.best_w;
  for (int episode = 1; episode <= config.max_episodes; ++episode) {
    const std::vector<double> rewards = run_episode(env, candidate, env_rng);
    const double score = std::accumulate(rewards.begin(), rewards.end(), 0.0);
    const double g0 = discounted_return(rewards, config.gamma);

    state = update(state, candidate, g0, config);

    scores.push_back(score);
    window.push_back(score);
    window_sum += score;
    if (window.size() > kSolveWindow) {
      window_sum -= window.front();
      window.pop_front();
    }
    result.log.records.push_back(EpisodeRecord{
        .episode = episode,
        .score = score,
        .g0 = g0,
        .avg100 = window_sum / static_cast<double>(window.size()),
        .noise_scale = state.noise_scale,
    });

    if (is_solved(scores, env.solve_threshold)) {
      result.log.solved_at = episode;
      break;
    }
    candidate = perturb(state.best_w, state.noise_scale, noise_rng);
  }
  return result;
}

void write_csv(std::ostream& out, const TrainingLog& log) {
  out << kTrainingLogHeader << '\n';
  std::string line;
  for (const EpisodeRecord& r : log.records) {
    line.clear();
    line += std::to_string(r.episode);
    for (double v : {r.score, r.g0, r.avg100, r.noise_scale}) {
      line += ',';
      append_number(line, v);
    }
    line += '\n';
    out << line;
  }
}

}  // namespace noisyclimb
