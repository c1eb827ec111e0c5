#ifndef NOISYCLIMB_CARTPOLE_HPP_
#define NOISYCLIMB_CARTPOLE_HPP_

#include <cstddef>
#include <numbers>
#include <optional>
#include <span>
#include <string_view>

#include "noisyclimb/random.hpp"

namespace noisyclimb {

// Physical state of the cart-pole system.
struct CartpoleState {
  double x = 0.0;          // cart position [m]
  double x_dot = 0.0;      // cart velocity [m/s]
  double theta = 0.0;      // pole angle from vertical [rad]
  double theta_dot = 0.0;  // pole angular velocity [rad/s]

  bool is_finite() const;
  friend bool operator==(const CartpoleState&, const CartpoleState&) = default;
};

enum class Action : int { Left = 0, Right = 1 };

enum class CartpoleVariant { V0, V1 };

std::optional<CartpoleVariant> parse_variant(std::string_view name);
std::string_view variant_name(CartpoleVariant variant);

// Simulator constants and episode rules. Defaults are the v0 preset.
struct CartpoleConfig {
  double gravity = 9.8;
  double cart_mass = 1.0;
  double pole_mass = 0.1;
  double pole_half_length = 0.5;
  double force_mag = 10.0;
  double tau = 0.02;
  double angle_threshold = 15.0 * std::numbers::pi / 180.0;
  double position_threshold = 2.4;
  int max_episode_steps = 200;
  double solve_threshold = 195.0;
  double init_bound = 0.05;

  // Throws InvalidConfigError if any invariant is violated.
  void validate() const;

  friend bool operator==(const CartpoleConfig&, const CartpoleConfig&) = default;
};

CartpoleConfig preset(CartpoleVariant variant);

struct StepResult {
  CartpoleState state;
  double reward = 1.0;
  bool done = false;
};

// Draws every component independently from U[-init_bound, init_bound).
CartpoleState reset(const CartpoleConfig& config, Rng& rng);

// Advances the dynamics by one explicit Euler step of size `tau`.
// `steps_taken` is the number of steps already taken in the episode and
// must be below max_episode_steps. Throws InvalidStateError on a
// non-finite state.
StepResult step(const CartpoleConfig& config, const CartpoleState& state, Action action,
                int steps_taken);

inline constexpr std::size_t kSolveWindow = 100;

// True once at least kSolveWindow scores exist and the mean of the most
// recent kSolveWindow reaches `solve_threshold`.
bool is_solved(std::span<const double> scores, double solve_threshold);

}  // namespace noisyclimb

#endif  // NOISYCLIMB_CARTPOLE_HPP_
