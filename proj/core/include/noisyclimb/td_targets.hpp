#ifndef NOISYCLIMB_TD_TARGETS_HPP_
#define NOISYCLIMB_TD_TARGETS_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "noisyclimb/random.hpp"

namespace noisyclimb {

// Q-values of one state, indexed by action.
using QRow = std::span<const double>;

struct TargetParams {
  double reward = 0.0;
  double gamma = 0.99;

  void validate() const;
};

// sum_k gamma^k * rewards[k]
double discounted_return(std::span<const double> rewards, double gamma);

// Index of the largest value, lowest index on ties. Row must be non-empty.
std::size_t argmax(QRow row);

// reward + gamma * max_a q_next[a]
double dqn_target(const TargetParams& p, QRow q_next);

// Action chosen on q_next_current, evaluated on q_next_target.
double double_dqn_target(const TargetParams& p, QRow q_next_current, QRow q_next_target);

// reward + gamma * min(q1, q2)
double twin_min_target(const TargetParams& p, double q1, double q2);

inline constexpr double kTargetNoiseStd = 0.2;
inline constexpr double kTargetNoiseClip = 0.5;

// clamp(action + clamp(eps, -clip, clip), low, high), eps ~ N(0, std^2)
// per component.
std::vector<double> smoothed_target_action(std::span<const double> action, double std,
                                           double clip, std::span<const double> low,
                                           std::span<const double> high, Rng& rng);

// q + alpha * (g - q)
double sarsamax_update(double q, double alpha, double g);

struct BiasEstimate {
  double bias = 0.0;
  double std_error = 0.0;
  std::size_t trials = 0;
};

// Monte Carlo estimate of E[max_a (true_q[a] + eps_a)] - max_a true_q[a]
// with eps_a ~ N(0, noise_std^2).
BiasEstimate overestimation_bias_experiment(std::size_t n_actions, double noise_std, QRow true_q,
                                            std::size_t trials, Rng& rng);

}  // namespace noisyclimb

#endif  // NOISYCLIMB_TD_TARGETS_HPP_
