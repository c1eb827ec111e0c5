#include <doctest.h>

#include "noisyclimb/experiment.hpp"

using namespace noisyclimb;

TEST_CASE("summary statistics") {
  SUBCASE("odd count") {
    const SweepSummary s = summarize({{1, 150, 196, 150, 0}, {2, std::nullopt, 20, 2000, 0},
                                      {3, 110, 199, 110, 0}, {4, 300, 195, 300, 0}});
    CHECK(s.solve_rate == 0.75);
    REQUIRE(s.median_solved_at.has_value());
    CHECK(*s.median_solved_at == 150.0);
    CHECK(s.runs.size() == 4);
  }
  SUBCASE("even count averages the middle pair") {
    const SweepSummary s = summarize({{1, 100, 0, 0, 0}, {2, 121, 0, 0, 0}});
    CHECK(*s.median_solved_at == 110.5);
    CHECK(s.solve_rate == 1.0);
  }
  SUBCASE("nothing solved") {
    const SweepSummary s = summarize({{1, std::nullopt, 0, 5, 0}});
    CHECK_FALSE(s.median_solved_at.has_value());
    CHECK(s.solve_rate == 0.0);
  }
  SUBCASE("empty") {
    const SweepSummary s = summarize({});
    CHECK(s.solve_rate == 0.0);
    CHECK_FALSE(s.median_solved_at.has_value());
  }
}

TEST_CASE("single run summary mirrors its log") {
  ClimbConfig c;
  c.seed = 7;
  c.max_episodes = 400;
  const RunResult r = run_training(CartpoleConfig{}, c);
  CHECK(r.summary.seed == 7);
  CHECK(r.summary.episodes_run == static_cast<int>(r.training.log.records.size()));
  CHECK(r.summary.solved_at == r.training.log.solved_at);
  CHECK(r.summary.final_avg100 == r.training.log.records.back().avg100);
  CHECK(r.summary.wall_time >= 0.0);
  if (r.summary.solved_at) CHECK(*r.summary.solved_at <= r.summary.episodes_run);
}

TEST_CASE("a one-seed sweep equals the single run") {
  ClimbConfig c;
  c.seed = 11;
  c.max_episodes = 300;
  const auto sweep = run_sweep(CartpoleConfig{}, c, 11, 1, 1);
  REQUIRE(sweep.size() == 1);
  const RunResult single = run_training(CartpoleConfig{}, c);
  CHECK(sweep[0].summary.same_outcome(single.summary));
  CHECK(sweep[0].training.log == single.training.log);
}

TEST_CASE("sweeps are ordered by seed and independent of the worker count") {
  ClimbConfig c;
  c.max_episodes = 250;
  const CartpoleConfig env = preset(CartpoleVariant::V1);
  const auto serial = run_sweep(env, c, 100, 6, 1);
  const auto parallel = run_sweep(env, c, 100, 6, 4);
  const auto again = run_sweep(env, c, 100, 6, 3);
  REQUIRE(serial.size() == 6);
  REQUIRE(parallel.size() == 6);
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].summary.seed == 100 + i);
    CHECK(serial[i].summary.same_outcome(parallel[i].summary));
    CHECK(serial[i].training.log == parallel[i].training.log);
    CHECK(again[i].training.log == serial[i].training.log);
  }
}

TEST_CASE("invalid configs fail before any work starts") {
  ClimbConfig c;
  c.gamma = 2.0;
  CHECK_THROWS(run_sweep(CartpoleConfig{}, c, 0, 3, 2));
}
