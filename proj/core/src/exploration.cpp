#include "noisyclimb/exploration.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "noisyclimb/errors.hpp"

namespace noisyclimb {

void EpsilonSchedule::validate() const {
  if (m_eps < 1) throw InvalidConfigError("epsilon schedule: m_eps must be >= 1");
  if (!(eps_min > 0.0 && eps_min < 1.0)) {
    throw InvalidConfigError("epsilon schedule: eps_min must lie in (0, 1)");
  }
}

double epsilon(const EpsilonSchedule& schedule, long i) {
  if (i < 0) throw std::invalid_argument("epsilon: episode index must be >= 0");
  // The linear term reaches eps_min at m_eps only up to rounding.
  if (i >= schedule.m_eps) return schedule.eps_min;
  const double slope = (schedule.eps_min - 1.0) / static_cast<double>(schedule.m_eps);
  return std::max(slope * static_cast<double>(i) + 1.0, schedule.eps_min);
}

double gaussian_sample(const GaussianNoise& noise, Rng& rng) {
  if (noise.std < 0.0) throw std::invalid_argument("gaussian noise: std must be >= 0");
  return noise.mean + noise.std * standard_normal(rng);
}

OUProcess::OUProcess(double theta, double mu, double sigma, double dt)
    : theta_(theta), mu_(mu), sigma_(sigma), dt_(dt), x_(mu) {
  if (!(theta >= 0.0) || !(sigma >= 0.0) || !(dt > 0.0)) {
    throw InvalidConfigError("ou process: require theta >= 0, sigma >= 0, dt > 0");
  }
}

double OUProcess::step(Rng& rng) {
  const double z = standard_normal(rng);
  x_ += theta_ * (mu_ - x_) * dt_ + sigma_ * std::sqrt(dt_) * z;
  return x_;
}

double OUProcess::stationary_variance() const {
  const double rho = 1.0 - theta_ * dt_;
  return sigma_ * sigma_ * dt_ / (1.0 - rho * rho);
}

OUStatistics sample_ou_statistics(OUProcess process, std::size_t steps, Rng& rng) {
  OUStatistics stats;
  stats.steps = steps;
  if (steps == 0) return stats;

  std::vector<double> xs(steps);
  for (double& x : xs) x = process.step(rng);

  double sum = 0.0;
  for (double x : xs) sum += x;
  const double mean = sum / static_cast<double>(steps);

  double sq = 0.0;
  double lagged = 0.0;
  for (std::size_t t = 0; t < steps; ++t) {
    const double d = xs[t] - mean;
    sq += d * d;
    if (t + 1 < steps) lagged += d * (xs[t + 1] - mean);
  }
  stats.mean = mean;
  stats.variance = steps > 1 ? sq / static_cast<double>(steps - 1) : 0.0;
  stats.lag1_autocorrelation = sq > 0.0 ? lagged / sq : 0.0;
  return stats;
}

void AdaptiveSigma::validate() const {
  if (!(sigma > 0.0)) throw InvalidConfigError("adaptive sigma: sigma must be > 0");
  if (!(alpha > 1.0)) throw InvalidConfigError("adaptive sigma: alpha must be > 1");
  if (!(delta > 0.0)) throw InvalidConfigError("adaptive sigma: delta must be > 0");
}

AdaptiveSigma adaptive_sigma_update(const AdaptiveSigma& a, double distance) {
  if (!(distance >= 0.0)) {
    throw std::invalid_argument("adaptive sigma: distance must be >= 0");
  }
  AdaptiveSigma next = a;
  next.sigma = distance < a.delta ? a.sigma * a.alpha : a.sigma / a.alpha;
  return next;
}

namespace {

void check_batches(const std::vector<std::vector<double>>& a,
                   const std::vector<std::vector<double>>& b, const char* what) {
  if (a.empty() || b.empty()) {
    throw ShapeMismatchError(std::string(what) + ": batches must be non-empty");
  }
  if (a.size() != b.size()) {
    throw ShapeMismatchError(std::string(what) + ": batch sizes differ");
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != b[i].size() || a[i].empty()) {
      throw ShapeMismatchError(std::string(what) + ": vector shapes differ at row " +
                               std::to_string(i));
    }
  }
}

}  // namespace

double continuous_policy_distance(const ActionBatch& actions_a, const ActionBatch& actions_b) {
  check_batches(actions_a, actions_b, "continuous_policy_distance");
  double sum = 0.0;
  std::size_t count = 0;
  for (std::size_t i = 0; i < actions_a.size(); ++i) {
    for (std::size_t k = 0; k < actions_a[i].size(); ++k) {
      const double d = actions_a[i][k] - actions_b[i][k];
      sum += d * d;
      ++count;
    }
  }
  return std::sqrt(sum / static_cast<double>(count));
}

double discrete_policy_distance(const ProbabilityBatch& probs_a, const ProbabilityBatch& probs_b) {
  check_batches(probs_a, probs_b, "discrete_policy_distance");
  constexpr double kNormTolerance = 1e-9;
  auto check_normalized = [&](const std::vector<double>& p) {
    double total = 0.0;
    for (double v : p) {
      if (!(v >= 0.0)) throw std::invalid_argument("discrete_policy_distance: negative probability");
      total += v;
    }
    if (std::abs(total - 1.0) > kNormTolerance) {
      throw std::invalid_argument("discrete_policy_distance: probabilities must sum to 1");
    }
  };

  double total = 0.0;
  for (std::size_t i = 0; i < probs_a.size(); ++i) {
    check_normalized(probs_a[i]);
    check_normalized(probs_b[i]);
    double l1 = 0.0;
    for (std::size_t k = 0; k < probs_a[i].size(); ++k) {
      l1 += std::abs(probs_a[i][k] - probs_b[i][k]);
    }
    total += 0.5 * l1;
  }
  return total / static_cast<double>(probs_a.size());
}

}  // namespace noisyclimb
