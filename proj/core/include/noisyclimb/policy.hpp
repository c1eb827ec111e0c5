#ifndef NOISYCLIMB_POLICY_HPP_
#define NOISYCLIMB_POLICY_HPP_

#include <array>
#include <cstddef>

#include "noisyclimb/cartpole.hpp"

namespace noisyclimb {

// 4x2 weights of the linear softmax policy. Rows follow the state
// components (x, x_dot, theta, theta_dot), columns the actions (Left, Right).
class WeightMatrix {
 public:
  static constexpr std::size_t kRows = 4;
  static constexpr std::size_t kCols = 2;
  static constexpr std::size_t kSize = kRows * kCols;

  WeightMatrix() = default;
  explicit WeightMatrix(const std::array<double, kSize>& row_major) : values_(row_major) {}

  double& operator()(std::size_t row, std::size_t col) { return values_[row * kCols + col]; }
  double operator()(std::size_t row, std::size_t col) const { return values_[row * kCols + col]; }

  std::array<double, kSize>& values() { return values_; }
  const std::array<double, kSize>& values() const { return values_; }

  bool is_finite() const;

  friend bool operator==(const WeightMatrix&, const WeightMatrix&) = default;

 private:
  std::array<double, kSize> values_{};
};

using ActionProbabilities = std::array<double, 2>;

// softmax(state^T * w), stabilized by subtracting the larger logit.
ActionProbabilities action_probabilities(const WeightMatrix& w, const CartpoleState& state);

// Argmax over the two probabilities; ties go to Left.
Action greedy_action(const ActionProbabilities& probs);

Action act(const WeightMatrix& w, const CartpoleState& state);

}  // namespace noisyclimb

#endif  // NOISYCLIMB_POLICY_HPP_
