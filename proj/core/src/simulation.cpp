#include "neuroforage/experiments/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "neuroforage/errors.hpp"
#include "neuroforage/plasticity/plasticity.hpp"

namespace neuroforage::experiments {

namespace gn = group_names;
using world::ContactKind;
using world::ObjectKind;

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

world::Arena make_arena(const ScenarioConfig& c) {
  return world::Arena(c.arena_width, c.arena_height);
}

const snn::NeuronGroup* find_group(const snn::Network& net, std::string_view name) {
  for (const auto& g : net.groups()) {
    if (g.name == name) return &g;
  }
  return nullptr;
}

}  // namespace

Simulation::Simulation(const ScenarioConfig& config, std::uint64_t seed, TrialOptions options)
    : config_(config),
      options_(options),
      rng_(seed),
      blueprint_(resolve_blueprint(config)),
      net_(build_network(blueprint_, rng_)),
      arena_(make_arena(config)),
      da_(config.dopamine),
      schedule_(config.sensorimotor.period_ms),
      exploration_(config.sensorimotor.exploration_mean) {
  config_.validate();
  left_motor_ = &net_.group(gn::kLeftMotor);
  right_motor_ = &net_.group(gn::kRightMotor);
  dopamine_ = &net_.group(gn::kDopamine);
  food_touch_ = &net_.group(gn::kFoodTouch);
  food_container_touch_ = find_group(net_, gn::kFoodContainerTouch);
  empty_container_touch_ = find_group(net_, gn::kEmptyContainerTouch);
  range_groups_.emplace_back(&net_.group(gn::kLeftFood), &readout_.left_food);
  range_groups_.emplace_back(&net_.group(gn::kRightFood), &readout_.right_food);
  if (auto* g = find_group(net_, gn::kLeftContainer)) range_groups_.emplace_back(g, &readout_.left_container);
  if (auto* g = find_group(net_, gn::kRightContainer)) range_groups_.emplace_back(g, &readout_.right_container);
  std::size_t widest = dopamine_->size;
  for (const auto& g : net_.groups()) widest = std::max<std::size_t>(widest, g.size);
  scratch_.resize(widest);

  const auto& syn = net_.synapses();
  auto collect = [&](PathwaySelector sel) {
    std::vector<std::uint32_t> out;
    const auto rules = select_rules(blueprint_, sel);
    for (std::uint32_t i = 0; i < syn.size(); ++i) {
      if (std::find(rules.begin(), rules.end(), syn.pathway[i]) != rules.end()) out.push_back(i);
    }
    return out;
  };
  const bool containers = config_.architecture == Architecture::FoodContainer;
  ids_.food_cross = collect(PathwaySelector::FoodCross);
  ids_.food_straight = collect(PathwaySelector::FoodStraight);
  ids_.cont_cross = collect(PathwaySelector::ContainerCross);
  ids_.cont_straight = collect(PathwaySelector::ContainerStraight);
  ids_.foodtouch_da =
      collect(containers ? PathwaySelector::FoodContainerTouchDa : PathwaySelector::FoodTouchDa);
  ids_.emptytouch_da = collect(PathwaySelector::EmptyContainerTouchDa);
  learning_ = config_.learning.enabled && !net_.plastic_ids().empty();

  pose_.position = config_.start.position
                       ? arena_.wrap(*config_.start.position)
                       : world::Vec2{rng_.uniform(0.0, arena_.width()),
                                     rng_.uniform(0.0, arena_.height())};
  pose_.heading = world::normalize_heading(
      config_.start.heading ? *config_.start.heading : rng_.uniform(0.0, 2.0 * std::numbers::pi));
  const auto mid = config_.world.full_speed.mid();
  pose_.v_left = pose_.v_right = mid;
  if (config_.start.v_left) {
    pose_.v_left = *config_.start.v_left;
    pose_.v_right = *config_.start.v_right;
  }

  for (const auto& p : config_.objects.placed) {
    world::WorldObject o;
    o.kind = p.kind;
    o.position = arena_.wrap(p.position);
    if (o.is_container()) {
      o.radius = config_.world.container_radius;
      if (o.kind == ObjectKind::FoodContainer) o.contained_food = o.position;
    } else {
      o.radius = config_.world.food_radius;
    }
    arena_.objects.push_back(o);
  }
  world::populate(arena_, config_.world, rng_, config_.objects.food, config_.objects.poison,
                  config_.objects.food_containers, config_.objects.empty_containers,
                  pose_.position);
  // A start inside a container counts as already inside, without a touch.
  for (std::size_t i = 0; i < arena_.objects.size(); ++i) {
    const auto& o = arena_.objects[i];
    if (o.is_container() && arena_.distance(pose_.position, o.position) < o.radius) {
      pose_.inside_container = i;
      pose_.v_left = pose_.v_right = config_.world.half_speed.mid();
      break;
    }
  }

  duration_ms_ = static_cast<std::int64_t>(std::llround(config_.duration_s * 1000.0));
  if (config_.world_switch) {
    switch_ms_ = static_cast<std::int64_t>(std::llround(config_.world_switch->at_s * 1000.0));
  }

  log_.seed = seed;
  log_.architecture = config_.architecture;
  log_.config = scenario_to_json(config_);
  log_.duration_ms = duration_ms_;
  log_.weight_max = config_.learning.weight_max;
  log_.windows.reserve(static_cast<std::size_t>(duration_ms_ / config_.sensorimotor.period_ms + 2));
  log_.tracked_object = config_.escape.tracked_object;
  log_.tracked_initial_distance =
      config_.escape.tracked_object < config_.objects.placed.size()
          ? arena_.distance(pose_.position, arena_.objects[config_.escape.tracked_object].position)
          : kNaN;
  for (const auto& r : blueprint_.rules) log_.rule_names.push_back(r.name());
}

double Simulation::mean_weight(const std::vector<std::uint32_t>& ids) const {
  if (ids.empty()) return kNaN;
  const auto& w = net_.synapses().weight;
  double s = 0.0;
  for (auto id : ids) s += w[id];
  return s / static_cast<double>(ids.size());
}

double Simulation::mean_eligibility(const std::vector<std::uint32_t>& ids) const {
  if (ids.empty()) return kNaN;
  const auto& c = net_.synapses().eligibility;
  double s = 0.0;
  for (auto id : ids) s += c[id];
  return s / static_cast<double>(ids.size());
}

void Simulation::record_window() {
  WindowRecord r;
  r.t_ms = t_;
  r.collected_total = log_.food_collected + log_.poison_collected;
  r.da_level = da_.level();
  r.mean_w_food_cross = mean_weight(ids_.food_cross);
  r.mean_w_food_straight = mean_weight(ids_.food_straight);
  r.mean_w_cont_cross = mean_weight(ids_.cont_cross);
  r.mean_w_cont_straight = mean_weight(ids_.cont_straight);
  r.mean_w_foodtouch_da = mean_weight(ids_.foodtouch_da);
  r.mean_w_emptytouch_da = mean_weight(ids_.emptytouch_da);
  r.mean_elig_food_cross = mean_eligibility(ids_.food_cross);
  r.mean_elig_food_straight = mean_eligibility(ids_.food_straight);
  r.x = pose_.position.x;
  r.y = pose_.position.y;
  r.heading = pose_.heading;
  r.tracked_distance =
      config_.escape.tracked_object < config_.objects.placed.size()
          ? arena_.distance(pose_.position, arena_.objects[config_.escape.tracked_object].position)
          : kNaN;
  r.left_motor_spikes = last_left_;
  r.right_motor_spikes = last_right_;
  log_.windows.push_back(r);
}

void Simulation::on_boundary() {
  if (t_ > 0) {
    last_left_ = schedule_.left_count();
    last_right_ = schedule_.right_count();
    const auto speeds =
        sensorimotor::decode_motors(last_left_, last_right_, world::active_regime(pose_, config_.world));
    pose_.v_left = speeds.v_left;
    pose_.v_right = speeds.v_right;
  }
  if (learning_) {
    for (auto g : {snn::SynapseGroup::FoodTaxis, snn::SynapseGroup::ContainerTaxis,
                   snn::SynapseGroup::ContainerDopamine}) {
      plasticity::homeostatic_dampen(net_.synapses(), net_.plastic_ids(), g,
                                     config_.learning.dampening_threshold,
                                     config_.learning.dampening_step, config_.learning.weight_min);
    }
  }
  record_window();
  schedule_.begin_window(t_, rng_);

  readout_ = world::sense(arena_, pose_, config_.world, rng_);
  for (const auto& [group, value] : range_groups_) {
    if (*value <= 0.0) continue;
    std::span<double> cur(scratch_.data(), group->size);
    sensorimotor::encode_range(*value, config_.sensorimotor.range_gain, rng_, cur);
    net_.inject(*group, cur);
  }
}

void Simulation::apply_world_switch() {
  const auto& ws = *config_.world_switch;
  for (auto& o : arena_.objects) {
    if (o.kind != ws.from) continue;
    if (o.is_container() != (ws.to == ObjectKind::FoodContainer || ws.to == ObjectKind::EmptyContainer)) {
      throw ConfigError("world_switch: cannot turn an item into a container or back");
    }
    o.kind = ws.to;
    if (o.kind == ObjectKind::EmptyContainer) o.contained_food.reset();
  }
}

void Simulation::inject_touch(const snn::NeuronGroup& group) {
  std::span<double> cur(scratch_.data(), group.size);
  sensorimotor::encode_range(1.0, config_.sensorimotor.touch_mean, rng_, cur);
  net_.inject(group, cur);
}

void Simulation::step() {
  if (schedule_.is_boundary(t_)) on_boundary();
  if (switch_ms_ && *switch_ms_ == t_) apply_world_switch();

  if (config_.sensorimotor.exploration) {
    const auto* target = schedule_.exploration_target() == sensorimotor::MotorSide::Left
                             ? left_motor_
                             : right_motor_;
    std::span<double> cur(scratch_.data(), target->size);
    sensorimotor::exploration_stimulus(exploration_, rng_, cur);
    net_.inject(*target, cur);
  }
  {
    const auto& drive = config_.dopamine_drive;
    std::span<double> cur(scratch_.data(), dopamine_->size);
    if (drive.noise_sd > 0.0) {
      for (auto& c : cur) c = drive.sample(rng_);
    } else {
      std::fill(cur.begin(), cur.end(), drive.constant);
    }
    net_.inject(*dopamine_, cur);
  }

  pose_ = world::advance_robot(pose_, 1e-3, arena_, config_.world.wheel_separation);
  const auto events = world::resolve_contacts(arena_, pose_, config_.world, rng_);
  for (const auto& ev : events) {
    log_.contacts.push_back({t_, ev.kind, ev.object});
    switch (ev.kind) {
      case ContactKind::FoodCollected:
        ++log_.food_collected;
        inject_touch(*food_touch_);
        break;
      case ContactKind::PoisonCollected:
        ++log_.poison_collected;
        inject_touch(*food_touch_);
        poison_until_ms_ = t_ + config_.poison_context_ms;
        break;
      case ContactKind::EnteredFoodContainer:
        if (food_container_touch_) inject_touch(*food_container_touch_);
        break;
      case ContactKind::EnteredEmptyContainer:
        if (empty_container_touch_) inject_touch(*empty_container_touch_);
        break;
      case ContactKind::ExitedContainer:
        break;
    }
  }

  const auto& spikes = net_.step(t_);
  log_.total_spikes += spikes.size();
  if (options_.record_spikes) log_.spikes.insert(log_.spikes.end(), spikes.begin(), spikes.end());
  if (learning_) plasticity::apply_spike_pairings(net_, spikes, t_, config_.learning.stdp);

  int da_count = 0, left = 0, right = 0;
  for (const auto& s : spikes) {
    if (dopamine_->contains(s.neuron_index)) {
      ++da_count;
    } else if (left_motor_->contains(s.neuron_index)) {
      ++left;
    } else if (right_motor_->contains(s.neuron_index)) {
      ++right;
    }
  }
  log_.dopamine_spikes += static_cast<std::uint64_t>(da_count);
  schedule_.record_motor_spikes(left, right);
  da_.tick(da_count, t_ <= poison_until_ms_, t_);
  if (learning_) {
    plasticity::apply_dopamine_and_decay(net_.synapses(), net_.plastic_ids(), da_.level(),
                                         config_.learning.weight_min, config_.learning.weight_max,
                                         config_.learning.eligibility_tau_s);
  }
  ++t_;
}

void Simulation::run_until(std::int64_t t_ms) {
  while (t_ < t_ms) step();
}

TrialLog Simulation::finish() {
  run_until(duration_ms_);
  if (duration_ms_ > 0 || !log_.windows.empty()) {
    last_left_ = schedule_.left_count();
    last_right_ = schedule_.right_count();
    record_window();
  }
  const auto& syn = net_.synapses();
  log_.final_synapses = syn;
  log_.final_pathways.clear();
  for (std::size_t r = 0; r < blueprint_.rules.size(); ++r) {
    PathwayWeight pw;
    pw.name = blueprint_.rules[r].name();
    pw.plastic = blueprint_.rules[r].plastic;
    double s = 0.0;
    for (std::size_t i = 0; i < syn.size(); ++i) {
      if (syn.pathway[i] != r) continue;
      s += syn.weight[i];
      ++pw.synapses;
    }
    pw.mean_weight = pw.synapses ? s / static_cast<double>(pw.synapses) : kNaN;
    log_.final_pathways.push_back(pw);
  }
  return std::move(log_);
}

TrialLog run_trial(const ScenarioConfig& config, std::uint64_t seed, TrialOptions options) {
  Simulation sim(config, seed, options);
  return sim.finish();
}

bool attraction_criterion(double cross_mean, double straight_mean) noexcept {
  return cross_mean > 0.5 && cross_mean > 1.1 * straight_mean;
}

namespace {

struct Pool {
  double sum = 0.0;
  std::size_t n = 0;
  double mean() const { return n ? sum / static_cast<double>(n) : kNaN; }
};

Pool pool_rule(const TrialLog& log, std::string_view src, std::string_view dst) {
  Pool p;
  const std::string name = std::string(src) + "->" + std::string(dst);
  const auto& syn = log.final_synapses;
  for (std::size_t r = 0; r < log.rule_names.size(); ++r) {
    if (log.rule_names[r] != name) continue;
    for (std::size_t i = 0; i < syn.size(); ++i) {
      if (syn.pathway[i] == r) {
        p.sum += syn.weight[i];
        ++p.n;
      }
    }
  }
  return p;
}

Pool merge(Pool a, Pool b) { return {a.sum + b.sum, a.n + b.n}; }

}  // namespace

bool attraction_correct(const TrialLog& log, Modality modality) {
  if (modality == Modality::Food) {
    const auto cross = merge(pool_rule(log, gn::kLeftFood, gn::kRightMotor),
                             pool_rule(log, gn::kRightFood, gn::kLeftMotor));
    const auto straight = merge(pool_rule(log, gn::kLeftFood, gn::kLeftMotor),
                                pool_rule(log, gn::kRightFood, gn::kRightMotor));
    if (cross.n == 0) return false;
    return attraction_criterion(cross.mean(), straight.n ? straight.mean() : 0.0);
  }
  if (log.architecture != Architecture::FoodContainer) return false;
  const auto lc = pool_rule(log, gn::kLeftContainer, gn::kRightMotor);
  const auto ls = pool_rule(log, gn::kLeftContainer, gn::kLeftMotor);
  const auto rc = pool_rule(log, gn::kRightContainer, gn::kLeftMotor);
  const auto rs = pool_rule(log, gn::kRightContainer, gn::kRightMotor);
  return attraction_criterion(lc.mean(), ls.mean()) && attraction_criterion(rc.mean(), rs.mean());
}

std::optional<double> escape_time(const TrialLog& log, double departure_factor) {
  if (!std::isfinite(log.tracked_initial_distance)) return std::nullopt;
  std::optional<std::int64_t> collected_at;
  for (const auto& c : log.contacts) {
    if (c.object == log.tracked_object && (c.kind == ContactKind::FoodCollected || c.kind == ContactKind::PoisonCollected)) {
      collected_at = c.t_ms;
      break;
    }
  }
  const double limit = departure_factor * log.tracked_initial_distance;
  for (std::size_t i = 1; i < log.windows.size(); ++i) {
    const auto& w = log.windows[i];
    if (collected_at && w.t_ms > *collected_at) break;
    if (log.windows[i - 1].tracked_distance > limit && w.tracked_distance > limit) {
      return static_cast<double>(log.windows[i - 1].t_ms) / 1000.0;
    }
  }
  if (collected_at) return static_cast<double>(*collected_at) / 1000.0;
  return std::nullopt;
}

std::optional<double> first_time_at_least(const TrialLog& log, double WindowRecord::*field,
                                          double level) {
  for (const auto& w : log.windows) {
    if (w.*field >= level) return static_cast<double>(w.t_ms) / 1000.0;
  }
  return std::nullopt;
}

std::size_t collections_between(const TrialLog& log, ContactKind kind, double from_s, double to_s) {
  std::size_t n = 0;
  for (const auto& c : log.contacts) {
    const double t = static_cast<double>(c.t_ms) / 1000.0;
    if (c.kind == kind && t >= from_s && t < to_s) ++n;
  }
  return n;
}

const WindowRecord* window_at(const TrialLog& log, double t_s) {
  const auto t_ms = static_cast<std::int64_t>(std::llround(t_s * 1000.0));
  const WindowRecord* best = nullptr;
  for (const auto& w : log.windows) {
    if (w.t_ms > t_ms) break;
    best = &w;
  }
  return best;
}

}  // namespace neuroforage::experiments
