#include "neuroforage/experiments/blueprint.hpp"

#include <string>

#include "neuroforage/errors.hpp"

namespace neuroforage::experiments {

using snn::NeuronKind;
using snn::SynapseGroup;
namespace gn = group_names;

std::string_view to_string(Architecture a) noexcept {
  return a == Architecture::FoodOnly ? "food_only" : "food_container";
}

Architecture architecture_from_string(std::string_view s) {
  if (s == "food_only") return Architecture::FoodOnly;
  if (s == "food_container") return Architecture::FoodContainer;
  throw ConfigError("architecture: expected 'food_only' or 'food_container', got '" +
                    std::string(s) + "'");
}

std::size_t NetworkBlueprint::neuron_count() const noexcept {
  std::size_t n = 0;
  for (const auto& g : groups) n += g.size;
  return n;
}

std::optional<std::size_t> NetworkBlueprint::find_rule(std::string_view src,
                                                       std::string_view dst) const {
  for (std::size_t i = 0; i < rules.size(); ++i) {
    if (rules[i].src == src && rules[i].dst == dst) return i;
  }
  return std::nullopt;
}

NetworkBlueprint standard_blueprint(Architecture architecture) {
  NetworkBlueprint bp;
  bp.architecture = architecture;
  const bool containers = architecture == Architecture::FoodContainer;

  auto add_group = [&](std::string_view name, NeuronKind kind, std::uint32_t size) {
    bp.groups.push_back({std::string(name), kind, size});
  };
  add_group(gn::kLeftFood, NeuronKind::Excitatory, 20);
  add_group(gn::kRightFood, NeuronKind::Excitatory, 20);
  if (containers) {
    add_group(gn::kLeftContainer, NeuronKind::Excitatory, 20);
    add_group(gn::kRightContainer, NeuronKind::Excitatory, 20);
  }
  add_group(gn::kLeftMotor, NeuronKind::Excitatory, 20);
  add_group(gn::kRightMotor, NeuronKind::Excitatory, 20);
  add_group(gn::kFoodTouch, NeuronKind::Excitatory, 20);
  if (containers) {
    add_group(gn::kFoodContainerTouch, NeuronKind::Excitatory, 20);
    add_group(gn::kEmptyContainerTouch, NeuronKind::Excitatory, 20);
  }
  add_group(gn::kDopamine, NeuronKind::Dopaminergic, 40);
  add_group(gn::kInhibitory, NeuronKind::Inhibitory, 20);

  auto rule = [&](std::string_view src, std::string_view dst, double p, WeightSpec w, bool plastic,
                  SynapseGroup g) {
    bp.rules.push_back({std::string(src), std::string(dst), p, w, plastic, g});
  };
  for (auto sensor : {gn::kLeftFood, gn::kRightFood}) {
    for (auto motor : {gn::kLeftMotor, gn::kRightMotor}) {
      rule(sensor, motor, 0.85, {0.0, 0.0}, true, SynapseGroup::FoodTaxis);
    }
  }
  if (containers) {
    for (auto sensor : {gn::kLeftContainer, gn::kRightContainer}) {
      for (auto motor : {gn::kLeftMotor, gn::kRightMotor}) {
        rule(sensor, motor, 0.85, {0.0, 0.0}, true, SynapseGroup::ContainerTaxis);
      }
    }
  }
  rule(gn::kFoodTouch, gn::kDopamine, 0.10, {3.0, 3.0}, false, SynapseGroup::None);
  if (containers) {
    rule(gn::kFoodContainerTouch, gn::kDopamine, 0.10, {0.0, 0.0}, true,
         SynapseGroup::ContainerDopamine);
    rule(gn::kEmptyContainerTouch, gn::kDopamine, 0.10, {0.0, 0.0}, true,
         SynapseGroup::ContainerDopamine);
  }
  for (const auto& g : bp.groups) {
    if (g.name == gn::kInhibitory) continue;
    rule(gn::kInhibitory, g.name, 0.10, {-3.0, 0.0}, false, SynapseGroup::None);
  }
  return bp;
}

snn::Network build_network(const NetworkBlueprint& blueprint, Rng& rng) {
  std::vector<snn::NeuronGroup> groups;
  std::vector<snn::NeuronParams> params;
  snn::NeuronIndex next = 0;
  for (const auto& spec : blueprint.groups) {
    if (spec.size == 0) throw ConfigError("group '" + spec.name + "' has size 0");
    for (const auto& g : groups) {
      if (g.name == spec.name) throw ConfigError("duplicate group '" + spec.name + "'");
    }
    groups.push_back({spec.name, spec.kind, next, spec.size});
    for (std::uint32_t k = 0; k < spec.size; ++k) {
      const double r = rng.uniform();
      params.push_back(spec.kind == NeuronKind::Inhibitory
                           ? snn::inhibitory_params(r)
                           : snn::excitatory_params(r, blueprint.excitatory_params));
    }
    next += spec.size;
  }
  snn::Network net(groups, std::move(params));

  for (std::size_t ri = 0; ri < blueprint.rules.size(); ++ri) {
    const auto& rule = blueprint.rules[ri];
    if (!(rule.probability >= 0.0 && rule.probability <= 1.0)) {
      throw ConfigError("rule " + rule.name() + ": probability must lie in [0, 1]");
    }
    if (rule.initial.lo > rule.initial.hi) {
      throw ConfigError("rule " + rule.name() + ": weight range is inverted");
    }
    const auto& src = net.group(rule.src);
    const auto& dst = net.group(rule.dst);
    for (auto pre = src.first; pre < src.end(); ++pre) {
      for (auto post = dst.first; post < dst.end(); ++post) {
        if (pre == post) continue;
        if (!rng.bernoulli(rule.probability)) continue;
        const double w = rule.initial.lo == rule.initial.hi
                             ? rule.initial.lo
                             : rng.uniform(rule.initial.lo, rule.initial.hi);
        net.add_synapse(pre, post, w, rule.plastic, rule.group, static_cast<std::uint16_t>(ri));
      }
    }
  }
  net.finalize();
  return net;
}

}  // namespace neuroforage::experiments
