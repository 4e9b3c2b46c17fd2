#include "neuroforage/experiments/presets.hpp"

#include <cmath>

#include "neuroforage/errors.hpp"

namespace neuroforage::experiments {

namespace {

ScenarioConfig food_only_base() {
  ScenarioConfig c;
  c.architecture = Architecture::FoodOnly;
  c.arena_width = c.arena_height = 100.0;
  c.objects.food = 20;
  c.duration_s = 1000.0;
  c.trials = 50;
  return c;
}

ScenarioConfig container_base(std::size_t food_containers, std::size_t empty_containers,
                              double duration_s) {
  ScenarioConfig c;
  c.architecture = Architecture::FoodContainer;
  c.arena_width = c.arena_height = 300.0;
  c.objects.food_containers = food_containers;
  c.objects.empty_containers = empty_containers;
  c.duration_s = duration_s;
  c.trials = 50;
  return c;
}

PresetArm arm(std::string label, ScenarioConfig c, std::string_view preset, RobotVariant robot) {
  c.name = std::string(preset);
  c.robot = robot;
  return {std::move(label), std::move(c)};
}

std::vector<Preset> build_presets() {
  std::vector<Preset> out;
  {
    Preset p{"orbiting",
             "single food item with food-taxis weights preset; the robot starts locked in an "
             "orbit and must learn to break out",
             {}};
    auto learn = orbiting_config();
    auto frozen = learn;
    frozen.plasticity = false;
    auto positive = learn;
    positive.dopamine.baseline = +0.0004;
    p.arms.push_back({"learning", learn});
    p.arms.push_back({"learning_disabled", frozen});
    p.arms.push_back({"positive_baseline", positive});
    out.push_back(std::move(p));
  }
  {
    Preset p{"food_only", "20 food items in a 100 x 100 cm arena; learn food attraction from zero",
             {}};
    auto c = food_only_base();
    c.provenance = "food attraction learning";
    p.arms.push_back(arm("learning", c, p.name, RobotVariant::Learning));
    p.arms.push_back(arm("learning_disabled", c, p.name, RobotVariant::LearningDisabled));
    out.push_back(std::move(p));
  }
  {
    Preset p{"food_poison",
             "food attraction is learnt for 1000 s, then every food item turns into poison", {}};
    auto c = food_only_base();
    c.provenance = "food to poison reversal";
    c.duration_s = 2000.0;
    c.world_switch = WorldSwitch{1000.0, world::ObjectKind::Food, world::ObjectKind::Poison};
    p.arms.push_back(arm("learning", c, p.name, RobotVariant::Learning));
    p.arms.push_back(arm("learning_disabled", c, p.name, RobotVariant::LearningDisabled));
    out.push_back(std::move(p));
  }
  {
    Preset p{"container_dopamine",
             "12 food and 12 empty containers with taxis weights frozen; the container touch "
             "sensors learn whether they predict food",
             {}};
    auto c = container_base(12, 12, 3000.0);
    c.provenance = "dopamine transfer to a reward-predicting stimulus";
    p.arms.push_back(arm("thresholded", c, p.name, RobotVariant::DopamineTransfer));
    auto nothresh = c;
    nothresh.dopamine.thresholding = false;
    p.arms.push_back(arm("no_threshold", nothresh, p.name, RobotVariant::DopamineTransfer));
    out.push_back(std::move(p));
  }
  {
    Preset p{"secondary_behaviour",
             "17 food containers; food taxis frozen, container attraction learnt through the "
             "container dopamine response",
             {}};
    auto c = container_base(17, 0, 2000.0);
    c.provenance = "secondary behaviour learning";
    for (auto v : {RobotVariant::ContainerDopamineLearning, RobotVariant::LearningDisabled,
                   RobotVariant::NoContainerDopamine, RobotVariant::FixedHighContainerDopamine,
                   RobotVariant::Benchmark}) {
      p.arms.push_back(arm(std::string(to_string(v)), c, p.name, v));
    }
    out.push_back(std::move(p));
  }
  {
    Preset p{"dual_learning",
             "20 food containers; food and container attraction both learnt from zero weights", {}};
    auto c = container_base(20, 0, 5000.0);
    c.provenance = "dual behaviour learning";
    for (auto v : {RobotVariant::DualLearning, RobotVariant::RandomWalk, RobotVariant::Benchmark}) {
      p.arms.push_back(arm(std::string(to_string(v)), c, p.name, v));
    }
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

ScenarioConfig orbiting_config(OrbitGeometry g) {
  ScenarioConfig c;
  c.name = "orbiting";
  c.provenance = "escape from a forced orbit";
  c.architecture = Architecture::FoodOnly;
  c.arena_width = c.arena_height = 100.0;
  c.duration_s = 40.0;
  c.trials = 20;
  c.robot = RobotVariant::Taxis;
  const world::Vec2 food{50.0, 50.0};
  c.objects.placed.push_back({world::ObjectKind::Food, food});
  // Heading 0; the food sits at the given bearing to the robot's left.
  c.start.heading = 0.0;
  c.start.position = world::Vec2{food.x - g.food_distance * std::cos(g.food_bearing),
                                 food.y - g.food_distance * std::sin(g.food_bearing)};
  if (g.start_turning) {
    c.start.v_left = c.world.full_speed.v_min;
    c.start.v_right = c.world.full_speed.v_max;
  }
  c.escape.tracked_object = 0;
  return c;
}

const ScenarioConfig& Preset::arm(std::string_view label) const {
  for (const auto& a : arms) {
    if (a.label == label) return a.config;
  }
  throw ConfigError("preset '" + name + "' has no arm '" + std::string(label) + "'");
}

const std::vector<Preset>& presets() {
  static const std::vector<Preset> all = build_presets();
  return all;
}

const Preset& find_preset(std::string_view name) {
  for (const auto& p : presets()) {
    if (p.name == name) return p;
  }
  std::string msg = "unknown preset '" + std::string(name) + "' (available:";
  for (const auto& p : presets()) msg += " " + p.name;
  throw ConfigError(msg + ")");
}

}  // namespace neuroforage::experiments
