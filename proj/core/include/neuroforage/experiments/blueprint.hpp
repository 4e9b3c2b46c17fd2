#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "neuroforage/random.hpp"
#include "neuroforage/snn/network.hpp"

namespace neuroforage::experiments {

enum class Architecture { FoodOnly, FoodContainer };
std::string_view to_string(Architecture a) noexcept;
Architecture architecture_from_string(std::string_view s);

/// Canonical neuron group names.
namespace group_names {
inline constexpr std::string_view kLeftFood = "left_food";
inline constexpr std::string_view kRightFood = "right_food";
inline constexpr std::string_view kLeftContainer = "left_container";
inline constexpr std::string_view kRightContainer = "right_container";
inline constexpr std::string_view kLeftMotor = "left_motor";
inline constexpr std::string_view kRightMotor = "right_motor";
inline constexpr std::string_view kFoodTouch = "food_touch";
inline constexpr std::string_view kFoodContainerTouch = "food_container_touch";
inline constexpr std::string_view kEmptyContainerTouch = "empty_container_touch";
inline constexpr std::string_view kDopamine = "dopamine";
inline constexpr std::string_view kInhibitory = "inhibitory";
}  // namespace group_names

struct GroupSpec {
  std::string name;
  snn::NeuronKind kind = snn::NeuronKind::Excitatory;
  std::uint32_t size = 20;
};

/// Initial weight drawn uniformly from [lo, hi] (constant when lo == hi).
struct WeightSpec {
  double lo = 0.0;
  double hi = 0.0;
};

struct ConnectionRule {
  std::string src;
  std::string dst;
  double probability = 0.0;
  WeightSpec initial;
  bool plastic = false;
  snn::SynapseGroup group = snn::SynapseGroup::None;

  /// "src->dst"; also the pathway label in logs.
  std::string name() const { return src + "->" + dst; }
};

struct NetworkBlueprint {
  Architecture architecture = Architecture::FoodOnly;
  std::vector<GroupSpec> groups;
  std::vector<ConnectionRule> rules;
  snn::ExcitatoryParamSet excitatory_params = snn::ExcitatoryParamSet::Canonical;

  std::size_t neuron_count() const noexcept;
  /// Index of rule "src->dst", if present.
  std::optional<std::size_t> find_rule(std::string_view src, std::string_view dst) const;
};

/// Group layout and connection rules of the standard architectures: 160
/// neurons (food only) or 240 (food and containers), 20 per group except 40
/// dopaminergic neurons.
NetworkBlueprint standard_blueprint(Architecture architecture);

/// Instantiates neurons (heterogeneity r drawn once per neuron) and samples
/// every candidate edge of every rule independently. The pathway tag of a
/// synapse is the index of the rule that created it. Throws ConfigError on
/// unknown groups, probabilities outside [0, 1] or inverted weight ranges.
snn::Network build_network(const NetworkBlueprint& blueprint, Rng& rng);

}  // namespace neuroforage::experiments
