#ifndef NOISYCLIMB_SERIALIZATION_HPP_
#define NOISYCLIMB_SERIALIZATION_HPP_

#include <optional>

#include <nlohmann/json.hpp>

#include "noisyclimb/cartpole.hpp"
#include "noisyclimb/experiment.hpp"
#include "noisyclimb/hillclimb.hpp"
#include "noisyclimb/policy.hpp"

// JSON mappings for configs, checkpoints and summaries. Decoding is strict:
// missing or unknown keys raise nlohmann::json exceptions, and decoded
// configs are validated.
namespace noisyclimb {

void to_json(nlohmann::json& j, const CartpoleConfig& c);
void from_json(const nlohmann::json& j, CartpoleConfig& c);

void to_json(nlohmann::json& j, const ClimbConfig& c);
void from_json(const nlohmann::json& j, ClimbConfig& c);

// 4 rows x 2 columns, row-major.
void to_json(nlohmann::json& j, const WeightMatrix& w);
void from_json(const nlohmann::json& j, WeightMatrix& w);

void to_json(nlohmann::json& j, const RunSummary& s);
void from_json(const nlohmann::json& j, RunSummary& s);

void to_json(nlohmann::json& j, const SweepSummary& s);
void from_json(const nlohmann::json& j, SweepSummary& s);

// Everything needed to reproduce one training run.
struct RunManifest {
  CartpoleConfig env;
  ClimbConfig climb;
  std::optional<int> solved_at;
  int episodes_run = 0;
  WeightMatrix best_w;
};

void to_json(nlohmann::json& j, const RunManifest& m);
void from_json(const nlohmann::json& j, RunManifest& m);

}  // namespace noisyclimb

#endif  // NOISYCLIMB_SERIALIZATION_HPP_
