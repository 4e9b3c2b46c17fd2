// neuroforage: run foraging trials from a preset or a scenario file.
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "neuroforage/errors.hpp"
#include "neuroforage/experiments/batch.hpp"
#include "neuroforage/experiments/output.hpp"
#include "neuroforage/experiments/presets.hpp"
#include "neuroforage/experiments/scenario.hpp"

namespace fs = std::filesystem;
namespace nx = neuroforage::experiments;

namespace {

constexpr int kExitIo = 1;
constexpr int kExitConfig = 2;

enum class LogLevel { Summary, Windows, Spikes };

struct RunArgs {
  std::string config_path;
  std::string preset;
  std::string arm;
  std::string robot;
  std::optional<int> trials;
  std::optional<std::uint64_t> seed;
  std::optional<double> duration_s;
  std::string out;
  unsigned parallel = 1;
  LogLevel level = LogLevel::Windows;
  bool quiet = false;
};

nx::ScenarioConfig load_config(const RunArgs& a) {
  nx::ScenarioConfig c;
  if (!a.config_path.empty()) {
    std::ifstream in(a.config_path);
    if (!in) throw neuroforage::ConfigError("cannot open config '" + a.config_path + "'");
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::parse_error& e) {
      throw neuroforage::ConfigError(a.config_path + ": " + e.what());
    }
    c = nx::scenario_from_json(j);
  } else {
    const auto& p = nx::find_preset(a.preset);
    c = a.arm.empty() ? p.config() : p.arm(a.arm);
  }
  if (!a.robot.empty()) c.robot = nx::robot_variant_from_string(a.robot);
  if (a.trials) c.trials = *a.trials;
  if (a.seed) c.seed = *a.seed;
  if (a.duration_s) c.duration_s = *a.duration_s;
  c.validate();
  return c;
}

fs::path output_root(const RunArgs& a) {
  if (!a.out.empty()) return a.out;
  if (const char* env = std::getenv("NEUROFORAGE_OUT"); env && *env) return env;
  return "neuroforage_out";
}

int cmd_run(const RunArgs& a) {
  nx::ScenarioConfig config;
  try {
    config = load_config(a);
  } catch (const neuroforage::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  }
  const fs::path root = output_root(a);
  std::error_code ec;
  fs::create_directories(root, ec);
  if (ec) {
    std::cerr << "cannot create output directory " << root << ": " << ec.message() << '\n';
    return kExitIo;
  }

  nx::TrialOptions options;
  options.record_spikes = a.level == LogLevel::Spikes;
  nx::TrialSink sink;
  if (a.level != LogLevel::Summary) {
    sink = [&](std::size_t i, const nx::TrialLog& log) {
      nx::write_trial_dir(root / ("seed_" + std::to_string(log.seed)), log);
      if (!a.quiet) {
        std::cerr << "trial " << i << " seed " << log.seed << ": food " << log.food_collected
                  << ", poison " << log.poison_collected << '\n';
      }
    };
  }

  try {
    const auto summary = nx::run_batch(config, config.trials, a.parallel, options, sink);
    auto j = summary.to_json();
    j["code_version"] = nx::code_version();
    j["config"] = nx::scenario_to_json(config);
    std::ofstream f(root / "summary.json");
    f << j.dump(2) << '\n';
    f.close();
    if (!f) throw std::runtime_error("error while writing " + (root / "summary.json").string());
    std::ofstream csv(root / "summary.csv");
    nx::write_summary_csv(csv, summary);
    csv.close();
    if (!csv) throw std::runtime_error("error while writing " + (root / "summary.csv").string());
    if (!a.quiet) {
      std::cout << config.name << " [" << summary.robot << "] " << summary.trials.size()
                << " trials: mean food " << summary.mean_food << " (sd " << summary.sd_food
                << "), food attraction correct " << summary.pct_food_correct << "%";
      if (summary.pct_container_correct) {
        std::cout << ", container attraction correct " << *summary.pct_container_correct << "%";
      }
      std::cout << ", escapes " << summary.escapes << '\n';
    }
  } catch (const neuroforage::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  }
  return 0;
}

int cmd_presets(bool as_json) {
  if (as_json) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& p : nx::presets()) {
      nlohmann::json arms = nlohmann::json::array();
      for (const auto& a : p.arms) arms.push_back({{"label", a.label}, {"config", nx::scenario_to_json(a.config)}});
      out.push_back({{"name", p.name}, {"description", p.description}, {"arms", arms}});
    }
    std::cout << out.dump(2) << '\n';
    return 0;
  }
  for (const auto& p : nx::presets()) {
    std::cout << p.name << ": " << p.description << '\n';
    std::cout << "  provenance: " << p.config().provenance << '\n';
    std::cout << "  arms:";
    for (const auto& a : p.arms) std::cout << ' ' << a.label << " (" << nx::to_string(a.config.robot) << ')';
    std::cout << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Closed-loop spiking-network foraging simulator"};
  app.require_subcommand(1);

  RunArgs run;
  std::string level = "windows";
  auto* run_cmd = app.add_subcommand("run", "run a batch of trials and write logs");
  auto* src = run_cmd->add_option_group("source");
  src->add_option("--config", run.config_path, "scenario JSON file")->check(CLI::ExistingFile);
  src->add_option("--preset", run.preset, "bundled preset name (see `presets`)");
  src->require_option(1);
  run_cmd->add_option("--arm", run.arm, "preset arm label (default: the first arm)");
  run_cmd->add_option("--robot", run.robot, "override the robot variant");
  run_cmd->add_option("--trials", run.trials, "number of trials")->check(CLI::PositiveNumber);
  run_cmd->add_option("--seed", run.seed, "batch seed");
  run_cmd->add_option("--duration", run.duration_s, "simulated seconds per trial")
      ->check(CLI::NonNegativeNumber);
  run_cmd->add_option("--out", run.out, "output directory (default $NEUROFORAGE_OUT or ./neuroforage_out)");
  run_cmd->add_option("--parallel", run.parallel, "concurrent trials")->check(CLI::PositiveNumber);
  run_cmd->add_option("--log-level", level, "summary | windows | spikes")
      ->check(CLI::IsMember({"summary", "windows", "spikes"}));
  run_cmd->add_flag("-q,--quiet", run.quiet, "no progress output");

  bool presets_json = false;
  auto* presets_cmd = app.add_subcommand("presets", "list the bundled experiment presets");
  presets_cmd->add_flag("--json", presets_json, "print every arm as a resolved scenario");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitConfig;
  }

  if (*presets_cmd) return cmd_presets(presets_json);
  run.level = level == "summary" ? LogLevel::Summary : level == "spikes" ? LogLevel::Spikes : LogLevel::Windows;
  return cmd_run(run);
}
