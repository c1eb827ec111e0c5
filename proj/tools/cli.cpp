#include "cli.hpp"

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "noisyclimb/errors.hpp"
#include "noisyclimb/experiment.hpp"
#include "noisyclimb/exploration.hpp"
#include "noisyclimb/serialization.hpp"
#include "noisyclimb/td_targets.hpp"

namespace noisyclimb::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

constexpr const char* kSeedEnvVar = "NOISYCLIMB_SEED";

std::string shortest(double v) {
  char buf[32];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, end);
}

std::string rounded(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

// Flags shared by `train` and `sweep`.
struct ClimbOptions {
  std::string env = "v0";
  std::string config_path;
  double gamma = 0.0;
  double noise_init = 0.0;
  double noise_min = 0.0;
  double noise_max = 0.0;
  double scale_factor = 0.0;
  int max_episodes = 0;
  std::uint64_t seed = 0;

  CLI::Option* env_opt = nullptr;
  CLI::Option* gamma_opt = nullptr;
  CLI::Option* noise_init_opt = nullptr;
  CLI::Option* noise_min_opt = nullptr;
  CLI::Option* noise_max_opt = nullptr;
  CLI::Option* scale_factor_opt = nullptr;
  CLI::Option* max_episodes_opt = nullptr;
  CLI::Option* seed_opt = nullptr;

  void attach(CLI::App& app) {
    env_opt = app.add_option("--env", env, "CartPole preset")
                  ->check(CLI::IsMember({"v0", "v1"}))
                  ->capture_default_str();
    app.add_option("--config", config_path,
                   "JSON document with \"env\" and \"climb\" objects (e.g. a run manifest)")
        ->check(CLI::ExistingFile);
    gamma_opt = app.add_option("--gamma", gamma, "Discount factor in (0, 1]");
    noise_init_opt = app.add_option("--noise-init", noise_init, "Initial noise scale");
    noise_min_opt = app.add_option("--noise-min", noise_min, "Noise scale floor");
    noise_max_opt = app.add_option("--noise-max", noise_max, "Noise scale cap");
    scale_factor_opt = app.add_option("--scale-factor", scale_factor, "Multiplicative step (> 1)");
    max_episodes_opt = app.add_option("--max-episodes", max_episodes, "Episode budget");
    seed_opt = app.add_option("--seed", seed, "Generator seed (default: $NOISYCLIMB_SEED or 0)");
  }

  // Preset or --config document first, then explicit flags on top.
  std::pair<CartpoleConfig, ClimbConfig> resolve() const {
    CartpoleConfig env_config = preset(*parse_variant(env));
    ClimbConfig climb_config;
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      const json doc = json::parse(in);
      doc.at("env").get_to(env_config);
      doc.at("climb").get_to(climb_config);
      if (env_opt->count() > 0) {
        const CartpoleConfig p = preset(*parse_variant(env));
        env_config.max_episode_steps = p.max_episode_steps;
        env_config.solve_threshold = p.solve_threshold;
      }
    } else if (const char* from_env = std::getenv(kSeedEnvVar)) {
      climb_config.seed = parse_seed(from_env);
    }
    if (gamma_opt->count() > 0) climb_config.gamma = gamma;
    if (noise_init_opt->count() > 0) climb_config.noise_init = noise_init;
    if (noise_min_opt->count() > 0) climb_config.noise_min = noise_min;
    if (noise_max_opt->count() > 0) climb_config.noise_max = noise_max;
    if (scale_factor_opt->count() > 0) climb_config.scale_factor = scale_factor;
    if (max_episodes_opt->count() > 0) climb_config.max_episodes = max_episodes;
    if (seed_opt->count() > 0) climb_config.seed = seed;
    env_config.validate();
    climb_config.validate();
    return {env_config, climb_config};
  }

  static std::uint64_t parse_seed(const std::string& text) {
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
      throw InvalidConfigError(std::string(kSeedEnvVar) + " is not an unsigned integer: " + text);
    }
    return value;
  }
};

void write_file(const fs::path& path, const std::string& contents) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + path.string() + " for writing");
  file << contents;
}

std::string training_csv(const TrainingLog& log) {
  std::ostringstream csv;
  write_csv(csv, log);
  return csv.str();
}

int cmd_train(const ClimbOptions& opts, const std::string& out_path, std::string manifest_path,
              std::ostream& out) {
  const auto [env, climb_config] = opts.resolve();
  const RunResult result = run_training(env, climb_config);

  if (manifest_path.empty()) manifest_path = fs::path(out_path).replace_extension(".json").string();
  write_file(out_path, training_csv(result.training.log));

  RunManifest manifest{env, climb_config, result.summary.solved_at, result.summary.episodes_run,
                       result.training.final_state.best_w};
  write_file(manifest_path, json(manifest).dump(2) + "\n");

  if (result.summary.solved_at) {
    out << "solved at episode " << *result.summary.solved_at << " (avg100 "
        << rounded(result.summary.final_avg100) << ")\n";
    return kExitSolved;
  }
  out << "not solved within " << climb_config.max_episodes << " episodes (avg100 "
      << rounded(result.summary.final_avg100) << ")\n";
  return kExitUnsolved;
}

int cmd_sweep(const ClimbOptions& opts, std::size_t seeds, unsigned workers,
              const std::string& out_path, const std::string& log_dir, std::ostream& out) {
  const auto [env, climb_config] = opts.resolve();
  const std::vector<RunResult> results =
      run_sweep(env, climb_config, climb_config.seed, seeds, workers);

  std::vector<RunSummary> runs;
  runs.reserve(results.size());
  for (const RunResult& r : results) {
    runs.push_back(r.summary);
    if (!log_dir.empty()) {
      write_file(fs::path(log_dir) / ("seed_" + std::to_string(r.summary.seed) + ".csv"),
                 training_csv(r.training.log));
    }
  }
  const SweepSummary summary = summarize(std::move(runs));
  write_file(out_path, json(summary).dump(2) + "\n");

  out << "seeds=" << seeds << " solve_rate=" << rounded(summary.solve_rate) << " median_solved_at="
      << (summary.median_solved_at ? rounded(*summary.median_solved_at) : std::string("none"))
      << "\n";
  return 0;
}

void cmd_schedule(long m_eps, double eps_min, long extra, std::ostream& out) {
  const EpsilonSchedule schedule{m_eps, eps_min};
  schedule.validate();
  out << "i,epsilon\n";
  for (long i = 0; i <= m_eps + extra; ++i) {
    out << i << ',' << rounded(epsilon(schedule, i)) << '\n';
  }
}

void cmd_demo_bias(const std::vector<std::size_t>& ns, double noise_std, std::size_t trials,
                   std::uint64_t seed, std::ostream& out) {
  out << "n_actions,noise_std,bias,std_err,trials\n";
  for (std::size_t n : ns) {
    Rng rng = make_stream(seed, n);
    const std::vector<double> true_q(n, 0.0);
    const BiasEstimate est = overestimation_bias_experiment(n, noise_std, true_q, trials, rng);
    out << n << ',' << shortest(noise_std) << ',' << shortest(est.bias) << ','
        << shortest(est.std_error) << ',' << est.trials << '\n';
  }
}

void cmd_ou_stats(const OUProcess& process, std::size_t steps, std::uint64_t seed,
                  std::ostream& out) {
  Rng rng = make_stream(seed, 0);
  const OUStatistics stats = sample_ou_statistics(process, steps, rng);
  out << "theta,mu,sigma,dt,steps,mean,variance,autocorr_lag1,stationary_variance,"
         "expected_autocorr\n";
  out << shortest(process.theta()) << ',' << shortest(process.mu()) << ','
      << shortest(process.sigma()) << ',' << shortest(process.dt()) << ',' << stats.steps << ','
      << shortest(stats.mean) << ',' << shortest(stats.variance) << ','
      << shortest(stats.lag1_autocorrelation) << ',' << shortest(process.stationary_variance())
      << ',' << shortest(1.0 - process.theta() * process.dt()) << '\n';
}

std::uint64_t default_seed() {
  if (const char* from_env = std::getenv(kSeedEnvVar)) return ClimbOptions::parse_seed(from_env);
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Noise-driven reinforcement-learning workbench"};
  app.name("noisyclimb");
  app.require_subcommand(1);

  ClimbOptions train_opts;
  std::string train_out = "run.csv";
  std::string train_manifest;
  CLI::App* train = app.add_subcommand("train", "Hill-climb a linear CartPole policy");
  train_opts.attach(*train);
  train->add_option("--out", train_out, "Training log CSV")->capture_default_str();
  train->add_option("--manifest", train_manifest, "Run manifest JSON (default: <out>.json)");

  ClimbOptions sweep_opts;
  std::size_t sweep_seeds = 20;
  unsigned sweep_workers = 0;
  std::string sweep_out = "sweep.json";
  std::string sweep_logs;
  CLI::App* sweep = app.add_subcommand("sweep", "Train over consecutive seeds and summarize");
  sweep_opts.attach(*sweep);
  sweep->add_option("--seeds", sweep_seeds, "Number of seeds")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sweep->add_option("--workers", sweep_workers, "Worker threads (0 = hardware)")
      ->capture_default_str();
  sweep->add_option("--out", sweep_out, "Sweep summary JSON")->capture_default_str();
  sweep->add_option("--log-dir", sweep_logs, "Directory for per-seed training CSVs");

  long m_eps = 100;
  double eps_min = 0.01;
  long extra = 20;
  CLI::App* schedule = app.add_subcommand("schedule", "Print the epsilon annealing table");
  schedule->add_option("--m-eps", m_eps, "Annealing horizon")->capture_default_str();
  schedule->add_option("--eps-min", eps_min, "Minimal exploration probability")
      ->capture_default_str();
  schedule->add_option("--extra", extra, "Rows printed past the horizon")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();

  std::vector<std::size_t> bias_ns{1, 2, 5, 10, 50};
  double bias_std = 1.0;
  std::size_t bias_trials = 1'000'000;
  std::uint64_t bias_seed = 0;
  CLI::App* demo_bias = app.add_subcommand("demo-bias", "Monte Carlo bias of the max operator");
  demo_bias->add_option("--n", bias_ns, "Action counts")
      ->check(CLI::PositiveNumber)
      ->delimiter(',')
      ->capture_default_str();
  demo_bias->add_option("--std", bias_std, "Noise standard deviation")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  demo_bias->add_option("--trials", bias_trials, "Monte Carlo trials per n")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  CLI::Option* bias_seed_opt = demo_bias->add_option("--seed", bias_seed, "Generator seed");

  double ou_theta = 0.15, ou_mu = 0.0, ou_sigma = 0.2, ou_dt = 1.0;
  std::size_t ou_steps = 1'000'000;
  std::uint64_t ou_seed = 0;
  CLI::App* ou = app.add_subcommand("ou-stats", "Monte Carlo moments of an OU process");
  ou->add_option("--theta", ou_theta, "Mean-reversion rate")->capture_default_str();
  ou->add_option("--mu", ou_mu, "Long-run mean")->capture_default_str();
  ou->add_option("--sigma", ou_sigma, "Diffusion scale")->capture_default_str();
  ou->add_option("--dt", ou_dt, "Time step")->capture_default_str();
  ou->add_option("--steps", ou_steps, "Number of transitions")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  CLI::Option* ou_seed_opt = ou->add_option("--seed", ou_seed, "Generator seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*train) return cmd_train(train_opts, train_out, train_manifest, out);
    if (*sweep) return cmd_sweep(sweep_opts, sweep_seeds, sweep_workers, sweep_out, sweep_logs, out);
    if (*schedule) {
      cmd_schedule(m_eps, eps_min, extra, out);
      return 0;
    }
    if (*demo_bias) {
      cmd_demo_bias(bias_ns, bias_std, bias_trials,
                    bias_seed_opt->count() > 0 ? bias_seed : default_seed(), out);
      return 0;
    }
    if (*ou) {
      cmd_ou_stats(OUProcess(ou_theta, ou_mu, ou_sigma, ou_dt), ou_steps,
                   ou_seed_opt->count() > 0 ? ou_seed : default_seed(), out);
      return 0;
    }
  } catch (const InvalidConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: bad config document: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace noisyclimb::cli
