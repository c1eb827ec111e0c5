#include <cmath>
#include <numbers>
#include <numeric>
#include <vector>

#include <doctest.h>

#include "noisyclimb/errors.hpp"
#include "noisyclimb/td_targets.hpp"

using namespace noisyclimb;

namespace {

// E[max of n iid standard normals], from numerical quadrature of
// x * n * phi(x) * Phi(x)^(n-1) over the real line.
constexpr double kExpectedMax2 = 0.5641895835477563;  // = 1/sqrt(pi)
constexpr double kExpectedMax5 = 1.1629644736405198;
constexpr double kExpectedMax10 = 1.538752730835173;

std::vector<double> random_row(Rng& rng, std::size_t n) {
  std::vector<double> row(n);
  for (double& v : row) v = uniform_symmetric(rng, 10.0);
  return row;
}

}  // namespace

TEST_CASE("discounted return") {
  CHECK(discounted_return({}, 0.7) == 0.0);
  const std::vector<double> ones(200, 1.0);
  CHECK(discounted_return(ones, 1.0) == 200.0);
  const std::vector<double> three{1.0, 1.0, 1.0};
  CHECK(discounted_return(three, 0.5) == 1.75);
  const std::vector<double> rs{3.0, -2.0, 7.5};
  CHECK(discounted_return(rs, 0.0) == 3.0);
  CHECK(discounted_return(rs, 1.0) == 8.5);
  CHECK_THROWS(discounted_return(rs, 1.5));

  Rng rng(4);
  for (int t = 0; t < 200; ++t) {
    const auto row = random_row(rng, 1 + t % 30);
    CHECK(discounted_return(row, 1.0) ==
          doctest::Approx(std::accumulate(row.begin(), row.end(), 0.0)).epsilon(1e-12));
    const double gamma = uniform01(rng);
    double brute = 0.0;
    for (std::size_t k = 0; k < row.size(); ++k) brute += std::pow(gamma, k) * row[k];
    CHECK(discounted_return(row, gamma) == doctest::Approx(brute).epsilon(1e-12));
  }
}

TEST_CASE("argmax breaks ties to the lowest index") {
  const std::vector<double> row{1.0, 3.0, 3.0, -1.0};
  CHECK(argmax(row) == 1);
  CHECK(argmax(std::vector<double>{2.0, 2.0}) == 0);
  CHECK_THROWS(argmax(std::vector<double>{}));
}

TEST_CASE("dqn target") {
  const std::vector<double> q{0.5, 2.0};
  CHECK(dqn_target({1.0, 0.9}, q) == doctest::Approx(2.8).epsilon(1e-15));
  CHECK(dqn_target({1.25, 0.0}, q) == 1.25);
  const std::vector<double> flat(5, -4.0);
  CHECK(dqn_target({2.0, 0.5}, flat) == 0.0);
  CHECK_THROWS(dqn_target({1.0, 0.9}, std::vector<double>{}));
  CHECK_THROWS(dqn_target({1.0, 0.9}, std::vector<double>{1.0, NAN}));
  CHECK_THROWS_AS(dqn_target({1.0, 1.1}, q), InvalidConfigError);
}

TEST_CASE("double dqn target") {
  const std::vector<double> cur{1.0, 0.9};
  const std::vector<double> tgt{0.2, 3.0};
  CHECK(double_dqn_target({0.0, 1.0}, cur, tgt) == 0.2);

  const std::vector<double> q{0.5, 2.0};
  CHECK(double_dqn_target({1.0, 0.9}, q, q) == dqn_target({1.0, 0.9}, q));

  const std::vector<double> flat(2, 1.5);
  CHECK(double_dqn_target({0.5, 0.5}, cur, flat) == 0.5 + 0.5 * 1.5);
  CHECK(double_dqn_target({0.5, 0.5}, tgt, flat) == 0.5 + 0.5 * 1.5);

  CHECK_THROWS_AS(double_dqn_target({0.0, 1.0}, cur, std::vector<double>{1.0}),
                  ShapeMismatchError);
}

TEST_CASE("twin minimum target") {
  CHECK(twin_min_target({0.0, 1.0}, 2.0, 3.0) == 2.0);
  CHECK(twin_min_target({0.0, 1.0}, 3.0, 2.0) == 2.0);
  CHECK(twin_min_target({1.0, 0.9}, 4.0, 4.0) == 1.0 + 0.9 * 4.0);
}

TEST_CASE("target identities over random rows") {
  Rng rng(31);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = 1 + t % 12;
    const auto cur = random_row(rng, n);
    const auto tgt = random_row(rng, n);
    const TargetParams p{uniform_symmetric(rng, 5.0), uniform01(rng)};
    CHECK(double_dqn_target(p, tgt, tgt) == dqn_target(p, tgt));
    CHECK(double_dqn_target(p, cur, tgt) <= dqn_target(p, tgt));

    const double q1 = uniform_symmetric(rng, 10.0);
    const double q2 = uniform_symmetric(rng, 10.0);
    const double y = twin_min_target(p, q1, q2);
    CHECK(y <= p.reward + p.gamma * q1);
    CHECK(y <= p.reward + p.gamma * q2);
    CHECK(twin_min_target(p, q1, q1) == p.reward + p.gamma * q1);
  }
}

TEST_CASE("smoothed target action") {
  Rng rng(12);
  const std::vector<double> low{-1.0, -2.0};
  const std::vector<double> high{1.0, 2.0};
  const std::vector<double> action{0.3, -0.7};

  CHECK(smoothed_target_action(action, 0.0, kTargetNoiseClip, low, high, rng) == action);

  const std::vector<double> wide_low{-100.0, -100.0};
  const std::vector<double> wide_high{100.0, 100.0};
  bool saw_clip = false;
  for (int i = 0; i < 2000; ++i) {
    const auto out = smoothed_target_action(action, 1.0, 0.5, wide_low, wide_high, rng);
    for (std::size_t k = 0; k < action.size(); ++k) {
      CHECK(std::abs(out[k] - action[k]) <= 0.5 + 1e-15);
      saw_clip |= std::abs(std::abs(out[k] - action[k]) - 0.5) < 1e-12;
    }
  }
  CHECK(saw_clip);

  // At the upper bound, any positive perturbation is clamped back.
  const std::vector<double> at_high{1.0, 2.0};
  for (int i = 0; i < 200; ++i) {
    const auto out = smoothed_target_action(at_high, kTargetNoiseStd, kTargetNoiseClip, low, high,
                                            rng);
    for (std::size_t k = 0; k < out.size(); ++k) CHECK(out[k] <= high[k]);
    for (std::size_t k = 0; k < out.size(); ++k) CHECK(out[k] >= high[k] - kTargetNoiseClip);
  }

  CHECK_THROWS(smoothed_target_action(std::vector<double>{1.5, 0.0}, 0.1, 0.5, low, high, rng));
  CHECK_THROWS_AS(smoothed_target_action(std::vector<double>{0.0}, 0.1, 0.5, low, high, rng),
                  ShapeMismatchError);
}

TEST_CASE("sarsamax update") {
  CHECK(sarsamax_update(0.0, 0.1, 1.0) == doctest::Approx(0.1).epsilon(1e-15));
  CHECK(sarsamax_update(0.37, 0.0, 5.0) == 0.37);
  CHECK(sarsamax_update(0.1, 1.0, 0.3) == 0.3);
  CHECK_THROWS(sarsamax_update(0.0, 1.5, 1.0));

  Rng rng(6);
  for (int i = 0; i < 2000; ++i) {
    const double q = uniform_symmetric(rng, 10.0);
    const double g = uniform_symmetric(rng, 10.0);
    const double out = sarsamax_update(q, uniform01(rng), g);
    CHECK(out >= std::min(q, g));
    CHECK(out <= std::max(q, g));
  }
}

TEST_CASE("overestimation bias against closed forms") {
  Rng rng(2020);
  const std::size_t trials = 400'000;

  const BiasEstimate one = overestimation_bias_experiment(1, 1.0, std::vector<double>{0.0}, trials, rng);
  CHECK(std::abs(one.bias) <= 3.0 * one.std_error);
  CHECK(one.trials == trials);

  struct Case {
    std::size_t n;
    double expected;
  };
  double previous = one.bias;
  for (const Case c : {Case{2, kExpectedMax2}, Case{5, kExpectedMax5}, Case{10, kExpectedMax10}}) {
    const BiasEstimate est =
        overestimation_bias_experiment(c.n, 1.0, std::vector<double>(c.n, 0.0), trials, rng);
    CHECK(est.std_error > 0.0);
    CHECK(std::abs(est.bias - c.expected) <= 3.0 * est.std_error);
    CHECK(est.bias >= previous);
    previous = est.bias;
  }
  CHECK(kExpectedMax2 == doctest::Approx(1.0 / std::sqrt(std::numbers::pi)).epsilon(1e-15));
}

TEST_CASE("overestimation bias edge cases") {
  Rng rng(1);
  const std::vector<double> q{1.0, 0.5, -2.0};
  const BiasEstimate silent = overestimation_bias_experiment(3, 0.0, q, 1000, rng);
  CHECK(silent.bias == 0.0);
  CHECK(silent.std_error == 0.0);

  // A dominant action leaves little room for bias.
  const std::vector<double> dominant{100.0, 0.0};
  const BiasEstimate est = overestimation_bias_experiment(2, 1.0, dominant, 100'000, rng);
  CHECK(std::abs(est.bias) <= 3.0 * est.std_error);

  const BiasEstimate single = overestimation_bias_experiment(3, 1.0, q, 1, rng);
  CHECK(single.std_error == 0.0);

  CHECK_THROWS(overestimation_bias_experiment(0, 1.0, std::vector<double>{}, 10, rng));
  CHECK_THROWS(overestimation_bias_experiment(3, 1.0, q, 0, rng));
  CHECK_THROWS_AS(overestimation_bias_experiment(2, 1.0, q, 10, rng), ShapeMismatchError);
}
