#include "neuroforage/experiments/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "neuroforage/errors.hpp"

namespace neuroforage::experiments {

using nlohmann::json;
namespace gn = group_names;

namespace {

constexpr std::pair<RobotVariant, std::string_view> kVariantNames[] = {
    {RobotVariant::Learning, "learning"},
    {RobotVariant::LearningDisabled, "learning_disabled"},
    {RobotVariant::RandomWalk, "random_walk"},
    {RobotVariant::Taxis, "taxis"},
    {RobotVariant::DopamineTransfer, "dopamine_transfer"},
    {RobotVariant::NoContainerDopamine, "no_container_dopamine"},
    {RobotVariant::ContainerDopamineLearning, "container_dopamine_learning"},
    {RobotVariant::FixedHighContainerDopamine, "fixed_high_container_dopamine"},
    {RobotVariant::Benchmark, "benchmark"},
    {RobotVariant::DualLearning, "dual_learning"},
};

constexpr std::pair<PathwaySelector, std::string_view> kSelectorNames[] = {
    {PathwaySelector::FoodCross, "food_cross"},
    {PathwaySelector::FoodStraight, "food_straight"},
    {PathwaySelector::ContainerCross, "container_cross"},
    {PathwaySelector::ContainerStraight, "container_straight"},
    {PathwaySelector::FoodContainerTouchDa, "food_container_touch_da"},
    {PathwaySelector::EmptyContainerTouchDa, "empty_container_touch_da"},
    {PathwaySelector::ContainerTouchDa, "container_touch_da"},
    {PathwaySelector::FoodTouchDa, "food_touch_da"},
    {PathwaySelector::SensorMotor, "sensor_motor"},
};

constexpr std::pair<world::ObjectKind, std::string_view> kKindNames[] = {
    {world::ObjectKind::Food, "food"},
    {world::ObjectKind::Poison, "poison"},
    {world::ObjectKind::FoodContainer, "food_container"},
    {world::ObjectKind::EmptyContainer, "empty_container"},
};

template <class E, std::size_t N>
E lookup(const std::pair<E, std::string_view> (&table)[N], std::string_view s,
         std::string_view field) {
  for (const auto& [value, name] : table) {
    if (name == s) return value;
  }
  std::string msg = std::string(field) + ": unknown value '" + std::string(s) + "' (expected one of";
  for (const auto& [value, name] : table) msg += " " + std::string(name);
  throw ConfigError(msg + ")");
}

template <class E, std::size_t N>
std::string_view name_of(const std::pair<E, std::string_view> (&table)[N], E v) noexcept {
  for (const auto& [value, name] : table) {
    if (value == v) return name;
  }
  return "?";
}

world::ObjectKind object_kind_from_string(std::string_view s, std::string_view field) {
  return lookup(kKindNames, s, field);
}

// Reads one JSON object, tracking its path for diagnostics and rejecting
// keys that nobody asked for.
class Fields {
 public:
  Fields(const json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) throw ConfigError(label() + ": expected an object");
  }

  /// Throws on any key that was never looked up.
  void done() const {
    for (const auto& [key, value] : j_.items()) {
      if (!seen_.contains(key)) throw ConfigError(child(key) + ": unknown field");
    }
  }

  bool has(const std::string& key) {
    seen_.insert(key);
    return j_.contains(key);
  }

  const json& at(const std::string& key) {
    if (!has(key)) throw ConfigError(child(key) + ": missing required field");
    return j_.at(key);
  }

  std::string child(const std::string& key) const {
    return path_.empty() ? key : path_ + "." + key;
  }

  double number(const std::string& key, double fallback) {
    return has(key) ? as_number(j_.at(key), child(key)) : fallback;
  }
  double number(const std::string& key) { return as_number(at(key), child(key)); }

  std::int64_t integer(const std::string& key, std::int64_t fallback) {
    return has(key) ? as_integer(j_.at(key), child(key)) : fallback;
  }
  std::int64_t integer(const std::string& key) { return as_integer(at(key), child(key)); }

  bool boolean(const std::string& key, bool fallback) {
    if (!has(key)) return fallback;
    const auto& v = j_.at(key);
    if (!v.is_boolean()) throw ConfigError(child(key) + ": expected true or false");
    return v.get<bool>();
  }

  std::string string(const std::string& key, const std::string& fallback) {
    return has(key) ? as_string(j_.at(key), child(key)) : fallback;
  }
  std::string string(const std::string& key) { return as_string(at(key), child(key)); }

  static double as_number(const json& v, const std::string& where) {
    if (!v.is_number()) throw ConfigError(where + ": expected a number");
    const double x = v.get<double>();
    if (!std::isfinite(x)) throw ConfigError(where + ": must be finite");
    return x;
  }
  static std::int64_t as_integer(const json& v, const std::string& where) {
    if (!v.is_number_integer()) throw ConfigError(where + ": expected an integer");
    return v.get<std::int64_t>();
  }
  static std::string as_string(const json& v, const std::string& where) {
    if (!v.is_string()) throw ConfigError(where + ": expected a string");
    return v.get<std::string>();
  }

 private:
  std::string label() const { return path_.empty() ? "config" : path_; }

  const json& j_;
  std::string path_;
  std::set<std::string> seen_;
};

std::size_t count_field(Fields& f, const std::string& key) {
  const auto n = f.integer(key, 0);
  if (n < 0) throw ConfigError(f.child(key) + ": must be non-negative");
  return static_cast<std::size_t>(n);
}

void require(bool ok, const std::string& field, const std::string& what) {
  if (!ok) throw ConfigError(field + ": " + what);
}

world::SpeedRegime regime_from_json(const json& j, const std::string& path,
                                    world::SpeedRegime fallback) {
  Fields f(j, path);
  fallback.v_min = f.number("v_min", fallback.v_min);
  fallback.v_max = f.number("v_max", fallback.v_max);
  f.done();
  return fallback;
}

json regime_to_json(const world::SpeedRegime& r) { return {{"v_min", r.v_min}, {"v_max", r.v_max}}; }

}  // namespace

std::string_view to_string(RobotVariant v) noexcept { return name_of(kVariantNames, v); }

RobotVariant robot_variant_from_string(std::string_view s) { return lookup(kVariantNames, s, "robot"); }

std::vector<RobotVariant> all_robot_variants() {
  std::vector<RobotVariant> out;
  for (const auto& [value, name] : kVariantNames) out.push_back(value);
  return out;
}

std::string_view to_string(PathwaySelector s) noexcept { return name_of(kSelectorNames, s); }

PathwaySelector pathway_selector_from_string(std::string_view s) {
  return lookup(kSelectorNames, s, "synapses.pathway");
}

std::vector<std::size_t> select_rules(const NetworkBlueprint& bp, PathwaySelector selector) {
  std::vector<std::pair<std::string_view, std::string_view>> wanted;
  switch (selector) {
    case PathwaySelector::FoodCross:
      wanted = {{gn::kLeftFood, gn::kRightMotor}, {gn::kRightFood, gn::kLeftMotor}};
      break;
    case PathwaySelector::FoodStraight:
      wanted = {{gn::kLeftFood, gn::kLeftMotor}, {gn::kRightFood, gn::kRightMotor}};
      break;
    case PathwaySelector::ContainerCross:
      wanted = {{gn::kLeftContainer, gn::kRightMotor}, {gn::kRightContainer, gn::kLeftMotor}};
      break;
    case PathwaySelector::ContainerStraight:
      wanted = {{gn::kLeftContainer, gn::kLeftMotor}, {gn::kRightContainer, gn::kRightMotor}};
      break;
    case PathwaySelector::FoodContainerTouchDa:
      wanted = {{gn::kFoodContainerTouch, gn::kDopamine}};
      break;
    case PathwaySelector::EmptyContainerTouchDa:
      wanted = {{gn::kEmptyContainerTouch, gn::kDopamine}};
      break;
    case PathwaySelector::ContainerTouchDa:
      wanted = {{gn::kFoodContainerTouch, gn::kDopamine}, {gn::kEmptyContainerTouch, gn::kDopamine}};
      break;
    case PathwaySelector::FoodTouchDa:
      wanted = {{gn::kFoodTouch, gn::kDopamine}};
      break;
    case PathwaySelector::SensorMotor:
      for (auto s : {gn::kLeftFood, gn::kRightFood, gn::kLeftContainer, gn::kRightContainer}) {
        for (auto m : {gn::kLeftMotor, gn::kRightMotor}) wanted.emplace_back(s, m);
      }
      break;
  }
  std::vector<std::size_t> out;
  for (const auto& [src, dst] : wanted) {
    if (auto i = bp.find_rule(src, dst)) out.push_back(*i);
  }
  return out;
}

std::vector<SynapseOverride> variant_overrides(RobotVariant variant, Architecture architecture) {
  using PS = PathwaySelector;
  const SynapseOverride food_taxis_frozen[] = {{PS::FoodCross, 4.0, false},
                                               {PS::FoodStraight, 0.0, false}};
  const SynapseOverride all_frozen_zero{PS::SensorMotor, 0.0, false};
  const bool containers = architecture == Architecture::FoodContainer;

  std::vector<SynapseOverride> out;
  auto add_taxis = [&] {
    if (containers) out.insert(out.end(), std::begin(food_taxis_frozen), std::end(food_taxis_frozen));
  };
  switch (variant) {
    case RobotVariant::Learning:
      add_taxis();
      break;
    case RobotVariant::LearningDisabled:
      out.push_back(all_frozen_zero);
      add_taxis();
      out.push_back({PS::ContainerTouchDa, 0.0, false});
      break;
    case RobotVariant::RandomWalk:
      out.push_back(all_frozen_zero);
      out.push_back({PS::ContainerTouchDa, 0.0, false});
      break;
    case RobotVariant::Taxis:
      out.push_back({PS::FoodCross, 4.0, std::nullopt});
      out.push_back({PS::FoodStraight, 0.0, std::nullopt});
      break;
    case RobotVariant::DopamineTransfer:
      add_taxis();
      out.push_back({PS::ContainerCross, 4.0, false});
      out.push_back({PS::ContainerStraight, 0.0, false});
      out.push_back({PS::ContainerTouchDa, 0.0, true});
      break;
    case RobotVariant::NoContainerDopamine:
      add_taxis();
      out.push_back({PS::ContainerTouchDa, 0.0, false});
      break;
    case RobotVariant::ContainerDopamineLearning:
      add_taxis();
      out.push_back({PS::ContainerTouchDa, 0.0, true});
      break;
    case RobotVariant::FixedHighContainerDopamine:
      add_taxis();
      out.push_back({PS::ContainerTouchDa, 4.0, false});
      break;
    case RobotVariant::Benchmark:
      out.push_back(all_frozen_zero);
      out.push_back({PS::FoodCross, 4.0, false});
      out.push_back({PS::ContainerCross, 4.0, false});
      out.push_back({PS::ContainerTouchDa, 0.0, false});
      break;
    case RobotVariant::DualLearning:
      out.push_back({PS::SensorMotor, 0.0, true});
      out.push_back({PS::ContainerTouchDa, 0.0, true});
      break;
  }
  return out;
}

void apply_overrides(NetworkBlueprint& bp, const std::vector<SynapseOverride>& overrides) {
  for (const auto& o : overrides) {
    for (auto i : select_rules(bp, o.selector)) {
      if (o.weight) bp.rules[i].initial = {*o.weight, *o.weight};
      if (o.plastic) bp.rules[i].plastic = *o.plastic;
    }
  }
}

NetworkBlueprint resolve_blueprint(const ScenarioConfig& config) {
  auto bp = standard_blueprint(config.architecture);
  bp.excitatory_params = config.neuron_params;
  apply_overrides(bp, variant_overrides(config.robot, config.architecture));
  apply_overrides(bp, config.synapses);
  if (!config.plasticity) {
    for (auto& r : bp.rules) r.plastic = false;
  }
  return bp;
}

void ScenarioConfig::validate() const {
  require(arena_width > 0.0, "arena.width", "must be positive");
  require(arena_height > 0.0, "arena.height", "must be positive");
  require(duration_s >= 0.0, "duration_s", "must be non-negative");
  require(trials >= 1, "trials", "must be at least 1");
  require(start.v_left.has_value() == start.v_right.has_value(), "start.v_left",
          "give both wheel speeds or neither");
  const bool containers = architecture == Architecture::FoodContainer;
  require(containers || (objects.food_containers == 0 && objects.empty_containers == 0),
          "objects", "containers need architecture 'food_container'");
  for (const auto& p : objects.placed) {
    require(containers || !(p.kind == world::ObjectKind::FoodContainer ||
                            p.kind == world::ObjectKind::EmptyContainer),
            "objects.placed", "containers need architecture 'food_container'");
  }
  require(dopamine.burst_threshold >= 0, "dopamine.burst_threshold", "must be non-negative");
  require(dopamine.release_delay_ms >= 1, "dopamine.release_delay_ms", "must be at least 1");
  require(dopamine.decay_time_constant_s > 1e-3, "dopamine.decay_time_constant_s",
          "must exceed one tick");
  require(dopamine.per_spike_increment >= 0.0, "dopamine.per_spike_increment",
          "must be non-negative");
  require(poison_context_ms >= 0, "dopamine.poison_context_ms", "must be non-negative");
  require(dopamine_drive.noise_sd >= 0.0, "dopamine_drive.noise_sd", "must be non-negative");
  require(learning.stdp.valid(), "learning", "STDP amplitudes and time constants must be positive");
  require(learning.eligibility_tau_s > 1e-3, "learning.eligibility_tau_s", "must exceed one tick");
  require(learning.weight_min < learning.weight_max, "learning.weight_min",
          "must be below weight_max");
  require(learning.dampening_step >= 0.0, "learning.dampening_step", "must be non-negative");
  require(sensorimotor.period_ms >= 1, "sensorimotor.period_ms", "must be at least 1");
  require(sensorimotor.range_gain >= 0.0, "sensorimotor.range_gain", "must be non-negative");
  require(sensorimotor.touch_mean >= 0.0, "sensorimotor.touch_mean", "must be non-negative");
  require(sensorimotor.exploration_mean >= 0.0, "sensorimotor.exploration_mean",
          "must be non-negative");
  require(world.food_radius > 0.0, "world.food_radius", "must be positive");
  require(world.container_radius > world.food_radius, "world.container_radius",
          "must exceed food_radius");
  require(world.robot_contact_radius >= 0.0, "world.robot_contact_radius", "must be non-negative");
  require(world.wheel_separation > 0.0, "world.wheel_separation", "must be positive");
  require(world.food_range > 0.0, "world.food_range", "must be positive");
  require(world.container_range > 0.0, "world.container_range", "must be positive");
  require(world.full_speed.v_min < world.full_speed.v_max, "world.full_speed",
          "v_min must be below v_max");
  require(world.half_speed.v_min < world.half_speed.v_max, "world.half_speed",
          "v_min must be below v_max");
  if (world_switch) require(world_switch->at_s >= 0.0, "world_switch.at_s", "must be non-negative");
  require(escape.departure_factor > 0.0, "escape.departure_factor", "must be positive");
  require(smoothing_window_s > 0.0, "smoothing_window_s", "must be positive");
}

ScenarioConfig scenario_from_json(const json& j) {
  ScenarioConfig c;
  Fields root(j, "");
  c.name = root.string("name", c.name);
  c.provenance = root.string("provenance", c.provenance);
  c.architecture = architecture_from_string(root.string("architecture"));
  {
    Fields a(root.at("arena"), "arena");
    c.arena_width = a.number("width");
    c.arena_height = a.number("height");
    a.done();
  }
  {
    Fields o(root.at("objects"), "objects");
    c.objects.food = count_field(o, "food");
    c.objects.poison = count_field(o, "poison");
    c.objects.food_containers = count_field(o, "food_containers");
    c.objects.empty_containers = count_field(o, "empty_containers");
    if (o.has("placed")) {
      const auto& list = o.at("placed");
      if (!list.is_array()) throw ConfigError("objects.placed: expected an array");
      for (std::size_t i = 0; i < list.size(); ++i) {
        const std::string path = "objects.placed[" + std::to_string(i) + "]";
        Fields p(list[i], path);
        PlacedObject po;
        po.kind = object_kind_from_string(p.string("kind"), path + ".kind");
        po.position = {p.number("x"), p.number("y")};
        c.objects.placed.push_back(po);
        p.done();
      }
    }
    o.done();
  }
  c.duration_s = root.number("duration_s");
  c.trials = static_cast<int>(root.integer("trials", c.trials));
  {
    const auto seed = root.integer("seed", static_cast<std::int64_t>(c.seed));
    require(seed >= 0, "seed", "must be non-negative");
    c.seed = static_cast<std::uint64_t>(seed);
  }
  c.robot = robot_variant_from_string(root.string("robot", std::string(to_string(c.robot))));
  c.plasticity = root.boolean("plasticity", c.plasticity);
  {
    const auto p = root.string("neuron_params", "canonical");
    if (p == "canonical") {
      c.neuron_params = snn::ExcitatoryParamSet::Canonical;
    } else if (p == "literal") {
      c.neuron_params = snn::ExcitatoryParamSet::Literal;
    } else {
      throw ConfigError("neuron_params: expected 'canonical' or 'literal'");
    }
  }
  if (root.has("synapses")) {
    const auto& list = root.at("synapses");
    if (!list.is_array()) throw ConfigError("synapses: expected an array");
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string path = "synapses[" + std::to_string(i) + "]";
      Fields s(list[i], path);
      SynapseOverride o;
      o.selector = pathway_selector_from_string(s.string("pathway"));
      if (s.has("weight")) o.weight = s.number("weight");
      if (s.has("plastic")) o.plastic = s.boolean("plastic", false);
      c.synapses.push_back(o);
      s.done();
    }
  }
  if (root.has("dopamine")) {
    Fields d(root.at("dopamine"), "dopamine");
    auto& p = c.dopamine;
    p.baseline = d.number("baseline", p.baseline);
    p.per_spike_increment = d.number("per_spike_increment", p.per_spike_increment);
    p.burst_threshold = static_cast<int>(d.integer("burst_threshold", p.burst_threshold));
    p.thresholding = d.boolean("thresholding", p.thresholding);
    p.release_delay_ms = d.integer("release_delay_ms", p.release_delay_ms);
    p.decay_time_constant_s = d.number("decay_time_constant_s", p.decay_time_constant_s);
    c.poison_context_ms = d.integer("poison_context_ms", c.poison_context_ms);
    d.done();
  }
  if (root.has("dopamine_drive")) {
    Fields d(root.at("dopamine_drive"), "dopamine_drive");
    c.dopamine_drive.constant = d.number("constant", c.dopamine_drive.constant);
    c.dopamine_drive.noise_sd = d.number("noise_sd", c.dopamine_drive.noise_sd);
    d.done();
  }
  if (root.has("learning")) {
    Fields l(root.at("learning"), "learning");
    auto& p = c.learning;
    p.stdp.a_plus = l.number("a_plus", p.stdp.a_plus);
    p.stdp.a_minus = l.number("a_minus", p.stdp.a_minus);
    p.stdp.tau_plus = l.number("tau_plus_s", p.stdp.tau_plus);
    p.stdp.tau_minus = l.number("tau_minus_s", p.stdp.tau_minus);
    p.eligibility_tau_s = l.number("eligibility_tau_s", p.eligibility_tau_s);
    p.weight_min = l.number("weight_min", p.weight_min);
    p.weight_max = l.number("weight_max", p.weight_max);
    p.dampening_threshold = l.number("dampening_threshold", p.dampening_threshold);
    p.dampening_step = l.number("dampening_step", p.dampening_step);
    l.done();
  }
  if (root.has("sensorimotor")) {
    Fields s(root.at("sensorimotor"), "sensorimotor");
    auto& p = c.sensorimotor;
    p.period_ms = s.integer("period_ms", p.period_ms);
    p.range_gain = s.number("range_gain", p.range_gain);
    p.touch_mean = s.number("touch_mean", p.touch_mean);
    p.exploration_mean = s.number("exploration_mean", p.exploration_mean);
    p.exploration = s.boolean("exploration", p.exploration);
    s.done();
  }
  if (root.has("world")) {
    Fields w(root.at("world"), "world");
    auto& p = c.world;
    p.food_radius = w.number("food_radius", p.food_radius);
    p.container_radius = w.number("container_radius", p.container_radius);
    p.robot_contact_radius = w.number("robot_contact_radius", p.robot_contact_radius);
    p.wheel_separation = w.number("wheel_separation", p.wheel_separation);
    p.food_range = w.number("food_range", p.food_range);
    p.container_range = w.number("container_range", p.container_range);
    if (w.has("full_speed")) p.full_speed = regime_from_json(w.at("full_speed"), "world.full_speed", p.full_speed);
    if (w.has("half_speed")) p.half_speed = regime_from_json(w.at("half_speed"), "world.half_speed", p.half_speed);
    w.done();
  }
  if (root.has("start")) {
    Fields s(root.at("start"), "start");
    const bool hx = s.has("x"), hy = s.has("y");
    if (hx != hy) throw ConfigError("start: give both x and y or neither");
    if (hx) c.start.position = world::Vec2{s.number("x"), s.number("y")};
    if (s.has("heading")) c.start.heading = s.number("heading");
    const bool hl = s.has("v_left"), hr = s.has("v_right");
    if (hl != hr) throw ConfigError("start: give both v_left and v_right or neither");
    if (hl) {
      c.start.v_left = s.number("v_left");
      c.start.v_right = s.number("v_right");
    }
    s.done();
  }
  if (root.has("world_switch") && !root.at("world_switch").is_null()) {
    Fields s(root.at("world_switch"), "world_switch");
    WorldSwitch ws;
    ws.at_s = s.number("at_s");
    ws.from = object_kind_from_string(s.string("from", "food"), "world_switch.from");
    ws.to = object_kind_from_string(s.string("to", "poison"), "world_switch.to");
    c.world_switch = ws;
    s.done();
  }
  if (root.has("escape")) {
    Fields e(root.at("escape"), "escape");
    const auto idx = e.integer("tracked_object", 0);
    require(idx >= 0, "escape.tracked_object", "must be non-negative");
    c.escape.tracked_object = static_cast<std::size_t>(idx);
    c.escape.departure_factor = e.number("departure_factor", c.escape.departure_factor);
    e.done();
  }
  c.smoothing_window_s = root.number("smoothing_window_s", c.smoothing_window_s);
  root.done();
  c.validate();
  return c;
}

json scenario_to_json(const ScenarioConfig& c) {
  json placed = json::array();
  for (const auto& p : c.objects.placed) {
    placed.push_back({{"kind", name_of(kKindNames, p.kind)}, {"x", p.position.x}, {"y", p.position.y}});
  }
  json synapses = json::array();
  for (const auto& o : c.synapses) {
    json s = {{"pathway", to_string(o.selector)}};
    if (o.weight) s["weight"] = *o.weight;
    if (o.plastic) s["plastic"] = *o.plastic;
    synapses.push_back(s);
  }
  json start = json::object();
  if (c.start.position) {
    start["x"] = c.start.position->x;
    start["y"] = c.start.position->y;
  }
  if (c.start.heading) start["heading"] = *c.start.heading;
  if (c.start.v_left) {
    start["v_left"] = *c.start.v_left;
    start["v_right"] = *c.start.v_right;
  }

  json j = {
      {"name", c.name},
      {"provenance", c.provenance},
      {"architecture", to_string(c.architecture)},
      {"arena", {{"width", c.arena_width}, {"height", c.arena_height}}},
      {"objects",
       {{"food", c.objects.food},
        {"poison", c.objects.poison},
        {"food_containers", c.objects.food_containers},
        {"empty_containers", c.objects.empty_containers},
        {"placed", placed}}},
      {"duration_s", c.duration_s},
      {"trials", c.trials},
      {"seed", c.seed},
      {"robot", to_string(c.robot)},
      {"plasticity", c.plasticity},
      {"neuron_params",
       c.neuron_params == snn::ExcitatoryParamSet::Canonical ? "canonical" : "literal"},
      {"synapses", synapses},
      {"dopamine",
       {{"baseline", c.dopamine.baseline},
        {"per_spike_increment", c.dopamine.per_spike_increment},
        {"burst_threshold", c.dopamine.burst_threshold},
        {"thresholding", c.dopamine.thresholding},
        {"release_delay_ms", c.dopamine.release_delay_ms},
        {"decay_time_constant_s", c.dopamine.decay_time_constant_s},
        {"poison_context_ms", c.poison_context_ms}}},
      {"dopamine_drive",
       {{"constant", c.dopamine_drive.constant}, {"noise_sd", c.dopamine_drive.noise_sd}}},
      {"learning",
       {{"a_plus", c.learning.stdp.a_plus},
        {"a_minus", c.learning.stdp.a_minus},
        {"tau_plus_s", c.learning.stdp.tau_plus},
        {"tau_minus_s", c.learning.stdp.tau_minus},
        {"eligibility_tau_s", c.learning.eligibility_tau_s},
        {"weight_min", c.learning.weight_min},
        {"weight_max", c.learning.weight_max},
        {"dampening_threshold", c.learning.dampening_threshold},
        {"dampening_step", c.learning.dampening_step}}},
      {"sensorimotor",
       {{"period_ms", c.sensorimotor.period_ms},
        {"range_gain", c.sensorimotor.range_gain},
        {"touch_mean", c.sensorimotor.touch_mean},
        {"exploration_mean", c.sensorimotor.exploration_mean},
        {"exploration", c.sensorimotor.exploration}}},
      {"world",
       {{"food_radius", c.world.food_radius},
        {"container_radius", c.world.container_radius},
        {"robot_contact_radius", c.world.robot_contact_radius},
        {"wheel_separation", c.world.wheel_separation},
        {"food_range", c.world.food_range},
        {"container_range", c.world.container_range},
        {"full_speed", regime_to_json(c.world.full_speed)},
        {"half_speed", regime_to_json(c.world.half_speed)}}},
      {"start", start},
      {"world_switch", nullptr},
      {"escape",
       {{"tracked_object", c.escape.tracked_object},
        {"departure_factor", c.escape.departure_factor}}},
      {"smoothing_window_s", c.smoothing_window_s},
  };
  if (c.world_switch) {
    j["world_switch"] = {{"at_s", c.world_switch->at_s},
                         {"from", name_of(kKindNames, c.world_switch->from)},
                         {"to", name_of(kKindNames, c.world_switch->to)}};
  }
  return j;
}

}  // namespace neuroforage::experiments
