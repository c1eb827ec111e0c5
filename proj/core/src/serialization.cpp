#include "noisyclimb/serialization.hpp"

#include <set>
#include <string>

namespace noisyclimb {

using nlohmann::json;

namespace {

// Rejects keys outside `allowed` so that typos in hand-written configs
// surface instead of silently falling back to defaults.
void require_keys(const json& j, const std::set<std::string>& allowed, const char* what) {
  if (!j.is_object()) {
    throw json::type_error::create(302, std::string(what) + " must be a JSON object", j);
  }
  for (const auto& [key, value] : j.items()) {
    if (!allowed.contains(key)) {
      throw json::out_of_range::create(
          403, std::string(what) + ": unknown key '" + key + "'", j);
    }
  }
  for (const std::string& key : allowed) {
    if (!j.contains(key)) {
      throw json::out_of_range::create(
          403, std::string(what) + ": missing key '" + key + "'", j);
    }
  }
}

json optional_int(const std::optional<int>& v) { return v ? json(*v) : json(nullptr); }

std::optional<int> read_optional_int(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<int>();
}

}  // namespace

void to_json(json& j, const CartpoleConfig& c) {
  j = json{{"gravity", c.gravity},
           {"cart_mass", c.cart_mass},
           {"pole_mass", c.pole_mass},
           {"pole_half_length", c.pole_half_length},
           {"force_mag", c.force_mag},
           {"tau", c.tau},
           {"angle_threshold", c.angle_threshold},
           {"position_threshold", c.position_threshold},
           {"max_episode_steps", c.max_episode_steps},
           {"solve_threshold", c.solve_threshold},
           {"init_bound", c.init_bound}};
}

void from_json(const json& j, CartpoleConfig& c) {
  require_keys(j,
               {"gravity", "cart_mass", "pole_mass", "pole_half_length", "force_mag", "tau",
                "angle_threshold", "position_threshold", "max_episode_steps", "solve_threshold",
                "init_bound"},
               "cartpole config");
  CartpoleConfig out;
  j.at("gravity").get_to(out.gravity);
  j.at("cart_mass").get_to(out.cart_mass);
  j.at("pole_mass").get_to(out.pole_mass);
  j.at("pole_half_length").get_to(out.pole_half_length);
  j.at("force_mag").get_to(out.force_mag);
  j.at("tau").get_to(out.tau);
  j.at("angle_threshold").get_to(out.angle_threshold);
  j.at("position_threshold").get_to(out.position_threshold);
  j.at("max_episode_steps").get_to(out.max_episode_steps);
  j.at("solve_threshold").get_to(out.solve_threshold);
  j.at("init_bound").get_to(out.init_bound);
  out.validate();
  c = out;
}

void to_json(json& j, const ClimbConfig& c) {
  j = json{{"gamma", c.gamma},
           {"noise_init", c.noise_init},
           {"noise_min", c.noise_min},
           {"noise_max", c.noise_max},
           {"scale_factor", c.scale_factor},
           {"max_episodes", c.max_episodes},
           {"seed", c.seed}};
}

void from_json(const json& j, ClimbConfig& c) {
  require_keys(j,
               {"gamma", "noise_init", "noise_min", "noise_max", "scale_factor", "max_episodes",
                "seed"},
               "climb config");
  ClimbConfig out;
  j.at("gamma").get_to(out.gamma);
  j.at("noise_init").get_to(out.noise_init);
  j.at("noise_min").get_to(out.noise_min);
  j.at("noise_max").get_to(out.noise_max);
  j.at("scale_factor").get_to(out.scale_factor);
  j.at("max_episodes").get_to(out.max_episodes);
  j.at("seed").get_to(out.seed);
  out.validate();
  c = out;
}

void to_json(json& j, const WeightMatrix& w) {
  j = json::array();
  for (std::size_t r = 0; r < WeightMatrix::kRows; ++r) {
    j.push_back(json::array({w(r, 0), w(r, 1)}));
  }
}

void from_json(const json& j, WeightMatrix& w) {
  if (!j.is_array() || j.size() != WeightMatrix::kRows) {
    throw json::type_error::create(302, "weight matrix must be an array of 4 rows", j);
  }
  WeightMatrix out;
  for (std::size_t r = 0; r < WeightMatrix::kRows; ++r) {
    const json& row = j.at(r);
    if (!row.is_array() || row.size() != WeightMatrix::kCols) {
      throw json::type_error::create(302, "weight matrix rows must hold 2 numbers", j);
    }
    for (std::size_t c = 0; c < WeightMatrix::kCols; ++c) row.at(c).get_to(out(r, c));
  }
  w = out;
}

void to_json(json& j, const RunSummary& s) {
  j = json{{"seed", s.seed},
           {"solved_at", optional_int(s.solved_at)},
           {"final_avg100", s.final_avg100},
           {"episodes_run", s.episodes_run},
           {"wall_time", s.wall_time}};
}

void from_json(const json& j, RunSummary& s) {
  require_keys(j, {"seed", "solved_at", "final_avg100", "episodes_run", "wall_time"},
               "run summary");
  j.at("seed").get_to(s.seed);
  s.solved_at = read_optional_int(j.at("solved_at"));
  j.at("final_avg100").get_to(s.final_avg100);
  j.at("episodes_run").get_to(s.episodes_run);
  j.at("wall_time").get_to(s.wall_time);
}

void to_json(json& j, const SweepSummary& s) {
  j = json{{"runs", s.runs},
           {"median_solved_at",
            s.median_solved_at ? json(*s.median_solved_at) : json(nullptr)},
           {"solve_rate", s.solve_rate}};
}

void from_json(const json& j, SweepSummary& s) {
  require_keys(j, {"runs", "median_solved_at", "solve_rate"}, "sweep summary");
  j.at("runs").get_to(s.runs);
  const json& median = j.at("median_solved_at");
  s.median_solved_at = median.is_null() ? std::nullopt : std::optional<double>(median.get<double>());
  j.at("solve_rate").get_to(s.solve_rate);
}

void to_json(json& j, const RunManifest& m) {
  j = json{{"env", m.env},
           {"climb", m.climb},
           {"seed", m.climb.seed},
           {"solved_at", optional_int(m.solved_at)},
           {"episodes_run", m.episodes_run},
           {"best_w", m.best_w}};
}

void from_json(const json& j, RunManifest& m) {
  require_keys(j, {"env", "climb", "seed", "solved_at", "episodes_run", "best_w"},
               "run manifest");
  RunManifest out;
  j.at("env").get_to(out.env);
  j.at("climb").get_to(out.climb);
  if (j.at("seed").get<std::uint64_t>() != out.climb.seed) {
    throw json::other_error::create(501, "run manifest: seed disagrees with climb.seed", j);
  }
  out.solved_at = read_optional_int(j.at("solved_at"));
  j.at("episodes_run").get_to(out.episodes_run);
  j.at("best_w").get_to(out.best_w);
  m = out;
}

}  // namespace noisyclimb
