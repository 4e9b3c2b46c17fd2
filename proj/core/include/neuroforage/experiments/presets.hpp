#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "neuroforage/experiments/scenario.hpp"

namespace neuroforage::experiments {

/// One robot or parameter variant of a preset.
struct PresetArm {
  std::string label;
  ScenarioConfig config;
};

struct Preset {
  std::string name;
  std::string description;
  /// First arm is the default run of the preset.
  std::vector<PresetArm> arms;

  const ScenarioConfig& config() const { return arms.front().config; }
  /// Arm by label; throws ConfigError if absent.
  const ScenarioConfig& arm(std::string_view label) const;
};

/// The six bundled experiments: orbiting, food_only, food_poison,
/// container_dopamine, secondary_behaviour and dual_learning.
const std::vector<Preset>& presets();
const Preset& find_preset(std::string_view name);

/// Start pose and food position of the orbiting preset, relative to a food
/// item at the arena centre.
struct OrbitGeometry {
  double food_distance = 4.53;  ///< cm from robot centre
  double food_bearing = 1.5;   ///< radians left of heading
  bool start_turning = true;   ///< first window already at the hard-left wheel speeds
};
ScenarioConfig orbiting_config(OrbitGeometry geometry = {});

}  // namespace neuroforage::experiments
