#pragma once

#include <filesystem>
#include <iosfwd>
#include <string_view>

#include "neuroforage/experiments/batch.hpp"
#include "neuroforage/experiments/simulation.hpp"

namespace neuroforage::experiments {

std::string_view code_version() noexcept;

inline constexpr std::string_view kTrialCsvHeader =
    "t_ms,collected_total,da_level,mean_w_food_cross,mean_w_food_straight,mean_w_cont_cross,"
    "mean_w_cont_straight,mean_w_foodtouch_da,mean_w_emptytouch_da,mean_elig_food_cross,"
    "mean_elig_food_straight";

/// One row per window boundary; NaN means (absent modality) become empty fields.
void write_trial_csv(std::ostream& out, const TrialLog& log);
/// `t_ms,x,y,heading` per window boundary.
void write_pose_csv(std::ostream& out, const TrialLog& log);
/// `pre,post,pathway,plastic,weight` for every synapse at the end of the trial.
void write_weights_csv(std::ostream& out, const TrialLog& log);
/// Seed, code version and the resolved configuration of one trial.
nlohmann::json trial_manifest(const TrialLog& log);

/// Writes trial.csv, pose.csv, weights_final.csv, config.json and (if the
/// log holds spikes) spikes.csv under `dir`. Throws std::runtime_error when
/// a file cannot be written.
void write_trial_dir(const std::filesystem::path& dir, const TrialLog& log);

/// One row per trial: index, seed, counts, correctness and escape time.
/// Optional values are written as empty fields.
void write_summary_csv(std::ostream& out, const BatchSummary& summary);

/// Shortest round-trip decimal form; empty for NaN.
std::string format_number(double x);

}  // namespace neuroforage::experiments
