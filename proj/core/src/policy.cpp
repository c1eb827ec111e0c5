#include "noisyclimb/policy.hpp"

#include <algorithm>
#include <cmath>

namespace noisyclimb {

bool WeightMatrix::is_finite() const {
  return std::all_of(values_.begin(), values_.end(), [](double v) { return std::isfinite(v); });
}

namespace {

std::array<double, WeightMatrix::kCols> logits(const WeightMatrix& w, const CartpoleState& state) {
  const std::array<double, WeightMatrix::kRows> features{state.x, state.x_dot, state.theta,
                                                         state.theta_dot};
  std::array<double, WeightMatrix::kCols> out{};
  for (std::size_t c = 0; c < WeightMatrix::kCols; ++c) {
    for (std::size_t r = 0; r < WeightMatrix::kRows; ++r) {
      out[c] += features[r] * w(r, c);
    }
  }
  return out;
}

}  // namespace

ActionProbabilities action_probabilities(const WeightMatrix& w, const CartpoleState& state) {
  const auto z = logits(w, state);
  const double top = std::max(z[0], z[1]);
  const double e0 = std::exp(z[0] - top);
  const double e1 = std::exp(z[1] - top);
  const double total = e0 + e1;
  return {e0 / total, e1 / total};
}

Action greedy_action(const ActionProbabilities& probs) {
  return probs[1] > probs[0] ? Action::Right : Action::Left;
}

// Softmax is monotone, so comparing logits selects the same action while
// avoiding ties introduced by rounding in exp().
Action act(const WeightMatrix& w, const CartpoleState& state) {
  const auto z = logits(w, state);
  return z[1] > z[0] ? Action::Right : Action::Left;
}

}  // namespace noisyclimb
