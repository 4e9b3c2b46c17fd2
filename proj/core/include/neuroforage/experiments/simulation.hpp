#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "neuroforage/experiments/scenario.hpp"
#include "neuroforage/plasticity/dopamine.hpp"
#include "neuroforage/random.hpp"
#include "neuroforage/sensorimotor/sensorimotor.hpp"
#include "neuroforage/snn/network.hpp"
#include "neuroforage/world/world.hpp"

namespace neuroforage::experiments {

/// State sampled at each window boundary. Container means are NaN in the
/// food-only architecture.
struct WindowRecord {
  std::int64_t t_ms = 0;
  std::size_t collected_total = 0;  ///< food plus poison items collected so far
  double da_level = 0.0;
  double mean_w_food_cross = 0.0;
  double mean_w_food_straight = 0.0;
  double mean_w_cont_cross = 0.0;
  double mean_w_cont_straight = 0.0;
  /// Food-container touch (container architecture) or food touch (food only).
  double mean_w_foodtouch_da = 0.0;
  double mean_w_emptytouch_da = 0.0;
  double mean_elig_food_cross = 0.0;
  double mean_elig_food_straight = 0.0;
  double x = 0.0;
  double y = 0.0;
  double heading = 0.0;
  /// Distance to the escape-tracked object, NaN if there is none.
  double tracked_distance = 0.0;
  int left_motor_spikes = 0;   ///< counts of the window that just ended
  int right_motor_spikes = 0;
};

struct ContactRecord {
  std::int64_t t_ms = 0;
  world::ContactKind kind = world::ContactKind::FoodCollected;
  std::size_t object = 0;
};

/// Mean final weight of one connection rule.
struct PathwayWeight {
  std::string name;
  std::size_t synapses = 0;
  double mean_weight = 0.0;
  bool plastic = false;
};

struct TrialLog {
  std::uint64_t seed = 0;
  Architecture architecture = Architecture::FoodOnly;
  nlohmann::json config;
  std::int64_t duration_ms = 0;
  double weight_max = 4.0;
  std::vector<WindowRecord> windows;
  std::vector<ContactRecord> contacts;
  std::size_t food_collected = 0;
  std::size_t poison_collected = 0;
  std::uint64_t dopamine_spikes = 0;
  std::uint64_t total_spikes = 0;
  std::size_t tracked_object = 0;
  /// Distance to the tracked object at t = 0 (NaN if none).
  double tracked_initial_distance = 0.0;
  std::vector<PathwayWeight> final_pathways;
  snn::SynapseTable final_synapses;
  std::vector<std::string> rule_names;
  std::vector<snn::SpikeEvent> spikes;  ///< only if recorded
};

struct TrialOptions {
  bool record_spikes = false;
};

/// One closed-loop trial: world, network, dopamine and the phasic schedule,
/// advanced one millisecond per step().
class Simulation {
 public:
  Simulation(const ScenarioConfig& config, std::uint64_t seed, TrialOptions options = {});

  /// Advances one tick.
  void step();
  /// Steps until `t_ms` ticks have been simulated.
  void run_until(std::int64_t t_ms);
  /// Runs to the configured duration and closes the log.
  TrialLog finish();

  std::int64_t now_ms() const noexcept { return t_; }
  const snn::Network& network() const noexcept { return net_; }
  snn::Network& network() noexcept { return net_; }
  const world::Arena& arena() const noexcept { return arena_; }
  const world::RobotPose& pose() const noexcept { return pose_; }
  const plasticity::DopamineSystem& dopamine() const noexcept { return da_; }
  const TrialLog& log() const noexcept { return log_; }
  const NetworkBlueprint& blueprint() const noexcept { return blueprint_; }

 private:
  struct PathwayIds {
    std::vector<std::uint32_t> food_cross, food_straight, cont_cross, cont_straight;
    std::vector<std::uint32_t> foodtouch_da, emptytouch_da;
  };

  void on_boundary();
  void record_window();
  void apply_world_switch();
  void inject_touch(const snn::NeuronGroup& group);
  double mean_weight(const std::vector<std::uint32_t>& ids) const;
  double mean_eligibility(const std::vector<std::uint32_t>& ids) const;

  ScenarioConfig config_;
  TrialOptions options_;
  Rng rng_;
  NetworkBlueprint blueprint_;
  snn::Network net_;
  world::Arena arena_;
  world::RobotPose pose_;
  plasticity::DopamineSystem da_;
  sensorimotor::PhasicSchedule schedule_;
  PoissonTable exploration_;

  const snn::NeuronGroup* left_motor_;
  const snn::NeuronGroup* right_motor_;
  const snn::NeuronGroup* dopamine_;
  const snn::NeuronGroup* food_touch_;
  const snn::NeuronGroup* food_container_touch_ = nullptr;
  const snn::NeuronGroup* empty_container_touch_ = nullptr;
  std::vector<std::pair<const snn::NeuronGroup*, double*>> range_groups_;
  world::SensorReadout readout_;
  std::vector<double> scratch_;

  PathwayIds ids_;
  bool learning_ = false;
  std::int64_t t_ = 0;
  std::int64_t duration_ms_ = 0;
  std::optional<std::int64_t> switch_ms_;
  std::int64_t poison_until_ms_ = -1;
  int last_left_ = 0;
  int last_right_ = 0;
  TrialLog log_;
};

TrialLog run_trial(const ScenarioConfig& config, std::uint64_t seed, TrialOptions options = {});

enum class Modality { Food, Container };

/// Attraction criterion on the final weights: cross mean above 0.5 and more
/// than 10% above the straight mean. Food pools both sides; Container
/// requires it of each side separately.
bool attraction_correct(const TrialLog& log, Modality modality);
/// The same criterion applied to given means.
bool attraction_criterion(double cross_mean, double straight_mean) noexcept;

/// Time (s) at which the robot left its orbit: the tracked distance exceeds
/// departure_factor times its initial value at two consecutive window
/// boundaries, or the tracked object is collected. Absent if neither happens.
std::optional<double> escape_time(const TrialLog& log, double departure_factor = 1.5);

/// First window time (s) at which a logged mean reaches `level`.
std::optional<double> first_time_at_least(const TrialLog& log,
                                          double WindowRecord::*field, double level);

/// Collections of `kind` with t in [from_s, to_s).
std::size_t collections_between(const TrialLog& log, world::ContactKind kind, double from_s,
                                double to_s);

/// The logged window closest to (and not after) t_s.
const WindowRecord* window_at(const TrialLog& log, double t_s);

}  // namespace neuroforage::experiments
