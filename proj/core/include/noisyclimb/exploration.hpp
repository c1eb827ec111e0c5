#ifndef NOISYCLIMB_EXPLORATION_HPP_
#define NOISYCLIMB_EXPLORATION_HPP_

#include <cstddef>
#include <vector>

#include "noisyclimb/random.hpp"

namespace noisyclimb {

// Linear epsilon annealing from 1 down to eps_min over m_eps episodes.
struct EpsilonSchedule {
  long m_eps = 100;
  double eps_min = 0.01;

  void validate() const;
};

// max((eps_min - 1) / m_eps * i + 1, eps_min)
double epsilon(const EpsilonSchedule& schedule, long i);

struct GaussianNoise {
  double mean = 0.0;
  double std = 0.1;
};

// mean + std * z; std == 0 yields mean exactly.
double gaussian_sample(const GaussianNoise& noise, Rng& rng);

// Euler-Maruyama discretization of an Ornstein-Uhlenbeck process:
//   x <- x + theta * (mu - x) * dt + sigma * sqrt(dt) * z
class OUProcess {
 public:
  OUProcess() = default;
  OUProcess(double theta, double mu, double sigma, double dt);

  double step(Rng& rng);
  void reset() { x_ = mu_; }

  double theta() const { return theta_; }
  double mu() const { return mu_; }
  double sigma() const { return sigma_; }
  double dt() const { return dt_; }
  double value() const { return x_; }
  void set_value(double x) { x_ = x; }

  // Variance of the stationary distribution of the discrete recursion,
  // sigma^2 dt / (1 - (1 - theta dt)^2). Meaningful for theta*dt in (0, 2).
  double stationary_variance() const;

 private:
  double theta_ = 0.15;
  double mu_ = 0.0;
  double sigma_ = 0.2;
  double dt_ = 1.0;
  double x_ = 0.0;
};

struct OUStatistics {
  std::size_t steps = 0;
  double mean = 0.0;
  double variance = 0.0;
  double lag1_autocorrelation = 0.0;
};

// Runs `steps` transitions of `process` and reports sample moments of the
// visited values.
OUStatistics sample_ou_statistics(OUProcess process, std::size_t steps, Rng& rng);

// Parameter-space noise scale adapted against a policy-distance threshold.
struct AdaptiveSigma {
  double sigma = 0.1;
  double alpha = 1.01;
  double delta = 0.1;

  void validate() const;
};

// sigma * alpha when distance < delta, sigma / alpha otherwise.
AdaptiveSigma adaptive_sigma_update(const AdaptiveSigma& a, double distance);

using ActionBatch = std::vector<std::vector<double>>;
using ProbabilityBatch = std::vector<std::vector<double>>;

// Root mean square of the componentwise action differences.
double continuous_policy_distance(const ActionBatch& actions_a, const ActionBatch& actions_b);

// Mean total-variation distance between paired action distributions.
double discrete_policy_distance(const ProbabilityBatch& probs_a, const ProbabilityBatch& probs_b);

}  // namespace noisyclimb

#endif  // NOISYCLIMB_EXPLORATION_HPP_
