#include "noisyclimb/cartpole.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

#include "noisyclimb/errors.hpp"

namespace noisyclimb {

bool CartpoleState::is_finite() const {
  return std::isfinite(x) && std::isfinite(x_dot) && std::isfinite(theta) &&
         std::isfinite(theta_dot);
}

std::optional<CartpoleVariant> parse_variant(std::string_view name) {
  if (name == "v0") return CartpoleVariant::V0;
  if (name == "v1") return CartpoleVariant::V1;
  return std::nullopt;
}

std::string_view variant_name(CartpoleVariant variant) {
  return variant == CartpoleVariant::V0 ? "v0" : "v1";
}

void CartpoleConfig::validate() const {
  auto require_positive = [](double value, const char* name) {
    if (!(value > 0.0) || !std::isfinite(value)) {
      throw InvalidConfigError(std::string("cartpole: ") + name + " must be finite and > 0");
    }
  };
  require_positive(gravity, "gravity");
  require_positive(cart_mass, "cart_mass");
  require_positive(pole_mass, "pole_mass");
  require_positive(pole_half_length, "pole_half_length");
  require_positive(force_mag, "force_mag");
  require_positive(tau, "tau");
  require_positive(position_threshold, "position_threshold");
  if (!(angle_threshold > 0.0 && angle_threshold < std::numbers::pi / 2)) {
    throw InvalidConfigError("cartpole: angle_threshold must lie in (0, pi/2)");
  }
  if (max_episode_steps < 1) {
    throw InvalidConfigError("cartpole: max_episode_steps must be >= 1");
  }
  if (!std::isfinite(solve_threshold)) {
    throw InvalidConfigError("cartpole: solve_threshold must be finite");
  }
  if (!(init_bound >= 0.0) || !std::isfinite(init_bound)) {
    throw InvalidConfigError("cartpole: init_bound must be finite and >= 0");
  }
}

CartpoleConfig preset(CartpoleVariant variant) {
  CartpoleConfig config;
  if (variant == CartpoleVariant::V1) {
    config.max_episode_steps = 500;
    config.solve_threshold = 475.0;
  }
  return config;
}

CartpoleState reset(const CartpoleConfig& config, Rng& rng) {
  CartpoleState s;
  s.x = uniform_symmetric(rng, config.init_bound);
  s.x_dot = uniform_symmetric(rng, config.init_bound);
  s.theta = uniform_symmetric(rng, config.init_bound);
  s.theta_dot = uniform_symmetric(rng, config.init_bound);
  return s;
}

StepResult step(const CartpoleConfig& config, const CartpoleState& state, Action action,
                int steps_taken) {
  if (!state.is_finite()) {
    throw InvalidStateError("cartpole: state has non-finite components");
  }
  if (steps_taken < 0 || steps_taken >= config.max_episode_steps) {
    throw std::out_of_range("cartpole: step called on a finished episode");
  }

  const double force = action == Action::Right ? config.force_mag : -config.force_mag;
  const double total_mass = config.cart_mass + config.pole_mass;
  const double pole_moment = config.pole_mass * config.pole_half_length;
  const double cos_theta = std::cos(state.theta);
  const double sin_theta = std::sin(state.theta);

  const double temp =
      (force + pole_moment * state.theta_dot * state.theta_dot * sin_theta) / total_mass;
  const double theta_acc =
      (config.gravity * sin_theta - cos_theta * temp) /
      (config.pole_half_length *
       (4.0 / 3.0 - config.pole_mass * cos_theta * cos_theta / total_mass));
  const double x_acc = temp - pole_moment * theta_acc * cos_theta / total_mass;

  StepResult result;
  result.state.x = state.x + config.tau * state.x_dot;
  result.state.x_dot = state.x_dot + config.tau * x_acc;
  result.state.theta = state.theta + config.tau * state.theta_dot;
  result.state.theta_dot = state.theta_dot + config.tau * theta_acc;
  result.reward = 1.0;
  result.done = std::abs(result.state.theta) > config.angle_threshold ||
                std::abs(result.state.x) > config.position_threshold ||
                steps_taken + 1 >= config.max_episode_steps;
  return result;
}

bool is_solved(std::span<const double> scores, double solve_threshold) {
  if (scores.size() < kSolveWindow) return false;
  const auto window = scores.last(kSolveWindow);
  const double mean =
      std::accumulate(window.begin(), window.end(), 0.0) / static_cast<double>(kSolveWindow);
  return mean >= solve_threshold;
}

}  // namespace noisyclimb
