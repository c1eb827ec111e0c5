#include "noisyclimb/td_targets.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "noisyclimb/errors.hpp"

namespace noisyclimb {

namespace {

void check_row(QRow row, const char* what) {
  if (row.empty()) throw std::invalid_argument(std::string(what) + ": empty Q row");
  for (double v : row) {
    if (!std::isfinite(v)) throw std::invalid_argument(std::string(what) + ": non-finite Q value");
  }
}

}  // namespace

void TargetParams::validate() const {
  if (!(gamma >= 0.0 && gamma <= 1.0)) throw InvalidConfigError("target: gamma must lie in [0, 1]");
  if (!std::isfinite(reward)) throw InvalidConfigError("target: reward must be finite");
}

double discounted_return(std::span<const double> rewards, double gamma) {
  if (!(gamma >= 0.0 && gamma <= 1.0)) {
    throw std::invalid_argument("discounted_return: gamma must lie in [0, 1]");
  }
  double total = 0.0;
  double discount = 1.0;
  for (double r : rewards) {
    total += discount * r;
    discount *= gamma;
  }
  return total;
}

std::size_t argmax(QRow row) {
  check_row(row, "argmax");
  return static_cast<std::size_t>(std::max_element(row.begin(), row.end()) - row.begin());
}

double dqn_target(const TargetParams& p, QRow q_next) {
  p.validate();
  check_row(q_next, "dqn_target");
  return p.reward + p.gamma * *std::max_element(q_next.begin(), q_next.end());
}

double double_dqn_target(const TargetParams& p, QRow q_next_current, QRow q_next_target) {
  p.validate();
  if (q_next_current.size() != q_next_target.size()) {
    throw ShapeMismatchError("double_dqn_target: selection and evaluation rows differ in length");
  }
  check_row(q_next_target, "double_dqn_target");
  return p.reward + p.gamma * q_next_target[argmax(q_next_current)];
}

double twin_min_target(const TargetParams& p, double q1, double q2) {
  p.validate();
  return p.reward + p.gamma * std::min(q1, q2);
}

std::vector<double> smoothed_target_action(std::span<const double> action, double std,
                                           double clip, std::span<const double> low,
                                           std::span<const double> high, Rng& rng) {
  if (action.size() != low.size() || action.size() != high.size()) {
    throw ShapeMismatchError("smoothed_target_action: action and bounds differ in length");
  }
  if (!(std >= 0.0) || !(clip >= 0.0)) {
    throw std::invalid_argument("smoothed_target_action: std and clip must be >= 0");
  }
  std::vector<double> out(action.size());
  for (std::size_t k = 0; k < action.size(); ++k) {
    if (!(low[k] <= action[k] && action[k] <= high[k])) {
      throw std::invalid_argument("smoothed_target_action: action outside [low, high]");
    }
    const double eps = std::clamp(std * standard_normal(rng), -clip, clip);
    out[k] = std::clamp(action[k] + eps, low[k], high[k]);
  }
  return out;
}

double sarsamax_update(double q, double alpha, double g) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("sarsamax_update: alpha must lie in [0, 1]");
  }
  if (alpha == 1.0) return g;
  // Rounding in q + alpha * (g - q) can step past the endpoints.
  return std::clamp(q + alpha * (g - q), std::min(q, g), std::max(q, g));
}

BiasEstimate overestimation_bias_experiment(std::size_t n_actions, double noise_std, QRow true_q,
                                            std::size_t trials, Rng& rng) {
  if (n_actions < 1 || trials < 1) {
    throw std::invalid_argument("overestimation_bias_experiment: need n_actions >= 1, trials >= 1");
  }
  if (true_q.size() != n_actions) {
    throw ShapeMismatchError("overestimation_bias_experiment: true_q length != n_actions");
  }
  if (!(noise_std >= 0.0)) {
    throw std::invalid_argument("overestimation_bias_experiment: noise_std must be >= 0");
  }
  check_row(true_q, "overestimation_bias_experiment");
  const double true_max = *std::max_element(true_q.begin(), true_q.end());

  // Welford accumulation of the per-trial excess over the true maximum.
  double mean = 0.0;
  double m2 = 0.0;
  for (std::size_t t = 1; t <= trials; ++t) {
    double noisy_max = -std::numeric_limits<double>::infinity();
    for (double q : true_q) {
      noisy_max = std::max(noisy_max, q + noise_std * standard_normal(rng));
    }
    const double excess = noisy_max - true_max;
    const double delta = excess - mean;
    mean += delta / static_cast<double>(t);
    m2 += delta * (excess - mean);
  }

  BiasEstimate est;
  est.bias = mean;
  est.trials = trials;
  est.std_error =
      trials > 1 ? std::sqrt(m2 / static_cast<double>(trials - 1) / static_cast<double>(trials))
                 : 0.0;
  return est;
}

}  // namespace noisyclimb
