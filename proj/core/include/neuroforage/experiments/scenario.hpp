#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "neuroforage/experiments/blueprint.hpp"
#include "neuroforage/plasticity/dopamine.hpp"
#include "neuroforage/plasticity/plasticity.hpp"
#include "neuroforage/random.hpp"
#include "neuroforage/sensorimotor/sensorimotor.hpp"
#include "neuroforage/world/world.hpp"

namespace neuroforage::experiments {

/// Robot variants of the experiments: weight presets plus plasticity switches.
enum class RobotVariant {
  Learning,                    ///< all sensor-motor synapses plastic from zero
  LearningDisabled,            ///< no plasticity anywhere
  RandomWalk,                  ///< zero sensor-motor weights, no plasticity
  Taxis,                       ///< food attraction weights preset, plastic
  DopamineTransfer,            ///< taxis weights frozen, container touch->DA plastic
  NoContainerDopamine,         ///< container touch->DA zero and frozen
  ContainerDopamineLearning,   ///< container touch->DA plastic from zero
  FixedHighContainerDopamine,  ///< container touch->DA frozen at the maximum
  Benchmark,                   ///< food and container attraction preset, frozen
  DualLearning,                ///< food and container attraction both learnt
};
std::string_view to_string(RobotVariant v) noexcept;
RobotVariant robot_variant_from_string(std::string_view s);
std::vector<RobotVariant> all_robot_variants();

/// Selects a set of connection rules by role.
enum class PathwaySelector {
  FoodCross,            ///< left food -> right motor, right food -> left motor
  FoodStraight,         ///< left food -> left motor, right food -> right motor
  ContainerCross,
  ContainerStraight,
  FoodContainerTouchDa,
  EmptyContainerTouchDa,
  ContainerTouchDa,     ///< both container touch groups -> dopaminergic
  FoodTouchDa,
  SensorMotor,          ///< every range sensor -> motor rule
};
std::string_view to_string(PathwaySelector s) noexcept;
PathwaySelector pathway_selector_from_string(std::string_view s);
/// Rule indices of `blueprint` matched by the selector.
std::vector<std::size_t> select_rules(const NetworkBlueprint& blueprint, PathwaySelector selector);

struct SynapseOverride {
  PathwaySelector selector = PathwaySelector::SensorMotor;
  std::optional<double> weight;
  std::optional<bool> plastic;
};

/// Expands a variant into overrides for the given architecture. In the
/// container architecture every variant except RandomWalk, Benchmark and
/// DualLearning starts with frozen food-attraction weights.
std::vector<SynapseOverride> variant_overrides(RobotVariant variant, Architecture architecture);

/// Applies overrides (in order) to a blueprint.
void apply_overrides(NetworkBlueprint& blueprint, const std::vector<SynapseOverride>& overrides);

struct PlacedObject {
  world::ObjectKind kind = world::ObjectKind::Food;
  world::Vec2 position;
};

struct ObjectManifest {
  std::size_t food = 0;
  std::size_t poison = 0;
  std::size_t food_containers = 0;
  std::size_t empty_containers = 0;
  /// Objects at fixed initial positions, placed before the random ones.
  std::vector<PlacedObject> placed;
};

struct StartPose {
  std::optional<world::Vec2> position;
  std::optional<double> heading;
  /// Wheel speeds for the first window (default: both at the regime midpoint).
  std::optional<double> v_left;
  std::optional<double> v_right;
};

/// Swaps every object of kind `from` to kind `to` at `at_s` simulated seconds.
struct WorldSwitch {
  double at_s = 0.0;
  world::ObjectKind from = world::ObjectKind::Food;
  world::ObjectKind to = world::ObjectKind::Poison;
};

/// Tonic input to every dopaminergic neuron on every tick: a constant plus
/// zero-mean uniform noise with standard deviation `noise_sd`. The default
/// amplitude puts the isolated population at about 0.4 Hz.
struct DopamineDrive {
  double constant = 3.65;
  double noise_sd = 0.163;

  double sample(Rng& rng) const noexcept {
    return constant + noise_sd * 3.4641016151377544 * (rng.uniform() - 0.5);
  }
};

/// Escape tracking follows one of the placed objects; scenarios without
/// placed objects have no escape time.
struct EscapeCriterion {
  std::size_t tracked_object = 0;  ///< index into objects.placed
  double departure_factor = 1.5;
};

struct ScenarioConfig {
  std::string name = "custom";
  std::string provenance;
  Architecture architecture = Architecture::FoodOnly;
  double arena_width = 100.0;
  double arena_height = 100.0;
  ObjectManifest objects;
  double duration_s = 1000.0;
  int trials = 1;
  std::uint64_t seed = 1;

  RobotVariant robot = RobotVariant::Learning;
  std::vector<SynapseOverride> synapses;  ///< applied after the variant
  bool plasticity = true;                ///< global switch
  snn::ExcitatoryParamSet neuron_params = snn::ExcitatoryParamSet::Canonical;

  plasticity::DopamineParams dopamine;
  plasticity::PlasticityParams learning;
  sensorimotor::SensorimotorParams sensorimotor;
  world::WorldParams world;
  DopamineDrive dopamine_drive;
  StartPose start;
  std::optional<WorldSwitch> world_switch;
  /// A DA burst within this many ms after a poison touch releases negatively.
  std::int64_t poison_context_ms = 50;
  EscapeCriterion escape;
  double smoothing_window_s = 50.0;

  /// Throws ConfigError naming the offending field.
  void validate() const;
};

/// Parses a scenario; missing required fields and bad values raise
/// ConfigError with the JSON path of the field.
ScenarioConfig scenario_from_json(const nlohmann::json& j);
/// Full resolved configuration, including every default.
nlohmann::json scenario_to_json(const ScenarioConfig& config);

/// Blueprint with the variant and explicit overrides applied.
NetworkBlueprint resolve_blueprint(const ScenarioConfig& config);

}  // namespace neuroforage::experiments
