#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "neuroforage/experiments/scenario.hpp"
#include "neuroforage/experiments/simulation.hpp"

namespace neuroforage::experiments {

/// Per-trial outcome kept after the full log has been handed off.
struct CorrectnessReport {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  std::size_t food_collected = 0;
  std::size_t poison_collected = 0;
  bool food_attraction = false;
  std::optional<bool> container_attraction;  ///< container architecture only
  std::optional<double> escape_time_s;
  double final_food_cross = 0.0;
  double final_food_straight = 0.0;
  double final_foodtouch_da = 0.0;
  double final_emptytouch_da = 0.0;
};

CorrectnessReport make_report(const TrialLog& log, std::size_t index, double departure_factor);

struct BatchSummary {
  std::string name;
  std::string robot;
  std::uint64_t batch_seed = 0;
  std::vector<CorrectnessReport> trials;  ///< ordered by index
  double mean_food = 0.0;
  double sd_food = 0.0;  ///< sample standard deviation, 0 for one trial
  double mean_poison = 0.0;
  double pct_food_correct = 0.0;
  std::optional<double> pct_container_correct;
  std::size_t escapes = 0;
  std::optional<double> median_escape_s;

  nlohmann::json to_json() const;
};

/// Aggregates reports (already ordered).
BatchSummary summarize(std::vector<CorrectnessReport> reports);

/// Called once per finished trial, serialized across workers.
using TrialSink = std::function<void(std::size_t index, const TrialLog& log)>;

/// Runs n independent trials with seeds derive_trial_seed(config.seed, i) on
/// up to `parallel` threads. The first exception thrown by a trial is
/// rethrown after all workers stop.
BatchSummary run_batch(const ScenarioConfig& config, int n_trials, unsigned parallel = 1,
                       TrialOptions options = {}, const TrialSink& sink = {});

/// Runs a batch and also keeps every log (for tests and acceptance).
std::vector<TrialLog> run_logs(const ScenarioConfig& config, int n_trials, unsigned parallel = 1,
                               TrialOptions options = {});

}  // namespace neuroforage::experiments
