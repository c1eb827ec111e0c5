#include <doctest.h>

#include "noisyclimb/serialization.hpp"

using namespace noisyclimb;
using nlohmann::json;

TEST_CASE("cartpole config uses its field names as keys") {
  const CartpoleConfig c = preset(CartpoleVariant::V1);
  const json j = c;
  CHECK(j.size() == 11);
  CHECK(j.at("max_episode_steps") == 500);
  CHECK(j.at("solve_threshold") == 475.0);
  CHECK(j.at("angle_threshold").get<double>() == c.angle_threshold);
  CHECK(j.get<CartpoleConfig>() == c);
  CHECK(json::parse(j.dump()).get<CartpoleConfig>() == c);
}

TEST_CASE("strict decoding") {
  json j = CartpoleConfig{};
  j["gravity_typo"] = 9.8;
  CHECK_THROWS_AS(j.get<CartpoleConfig>(), json::exception);

  json missing = ClimbConfig{};
  missing.erase("seed");
  CHECK_THROWS_AS(missing.get<ClimbConfig>(), json::exception);

  json invalid = ClimbConfig{};
  invalid["scale_factor"] = 0.5;
  CHECK_THROWS(invalid.get<ClimbConfig>());

  CHECK_THROWS_AS(json::array().get<CartpoleConfig>(), json::exception);
}

TEST_CASE("weight matrix is a 4x2 nested array") {
  const WeightMatrix w({1, 2, 3, 4, 5, 6, 7, 8});
  const json j = w;
  CHECK(j.dump() == "[[1.0,2.0],[3.0,4.0],[5.0,6.0],[7.0,8.0]]");
  CHECK(j.get<WeightMatrix>() == w);
  CHECK_THROWS(json::parse("[[1,2],[3,4]]").get<WeightMatrix>());
  CHECK_THROWS(json::parse("[[1,2],[3,4],[5,6],[7,8,9]]").get<WeightMatrix>());
}

TEST_CASE("values round-trip through text exactly") {
  Rng rng(17);
  for (int i = 0; i < 200; ++i) {
    WeightMatrix w;
    for (double& v : w.values()) v = uniform_symmetric(rng, 3.0);
    ClimbConfig c;
    c.noise_init = 0.5 * uniform01(rng) + 1e-3;
    c.noise_min = c.noise_init * uniform01(rng) + 1e-9;
    c.gamma = 0.5 + 0.5 * uniform01(rng);
    c.seed = rng();
    RunManifest m{preset(i % 2 ? CartpoleVariant::V0 : CartpoleVariant::V1), c,
                  i % 3 ? std::optional<int>(100 + i) : std::nullopt, 150 + i, w};
    const RunManifest back = json::parse(json(m).dump()).get<RunManifest>();
    CHECK(back.env == m.env);
    CHECK(back.climb == m.climb);
    CHECK(back.solved_at == m.solved_at);
    CHECK(back.episodes_run == m.episodes_run);
    CHECK(back.best_w == m.best_w);
  }
}

TEST_CASE("manifest seed must agree with the climb config") {
  json j = RunManifest{};
  j["seed"] = 99;
  CHECK_THROWS_AS(j.get<RunManifest>(), json::exception);
}

TEST_CASE("sweep summary encodes absent values as null") {
  SweepSummary s = summarize({RunSummary{3, std::nullopt, 120.5, 2000, 0.1}});
  const json j = s;
  CHECK(j.at("median_solved_at").is_null());
  CHECK(j.at("runs").at(0).at("solved_at").is_null());
  const SweepSummary back = j.get<SweepSummary>();
  CHECK_FALSE(back.median_solved_at.has_value());
  REQUIRE(back.runs.size() == 1);
  CHECK(back.runs[0].same_outcome(s.runs[0]));
  CHECK(back.runs[0].wall_time == 0.1);
}
