#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "neuroforage/snn/izhikevich.hpp"

namespace neuroforage::snn {

using NeuronIndex = std::uint32_t;

enum class NeuronKind : std::uint8_t { Excitatory, Inhibitory, Dopaminergic };

struct NeuronGroup {
  std::string name;
  NeuronKind kind = NeuronKind::Excitatory;
  NeuronIndex first = 0;
  NeuronIndex size = 0;

  NeuronIndex end() const noexcept { return first + size; }
  bool contains(NeuronIndex i) const noexcept { return i >= first && i < end(); }
};

struct SpikeEvent {
  NeuronIndex neuron_index = 0;
  std::int64_t time_ms = 0;

  friend bool operator==(const SpikeEvent&, const SpikeEvent&) = default;
};

/// Homeostatic dampening groups.
enum class SynapseGroup : std::uint8_t { None, FoodTaxis, ContainerTaxis, ContainerDopamine };

inline constexpr std::int64_t kNever = INT64_MIN / 4;

/// Struct-of-arrays synapse storage. Index i across all vectors is one synapse.
struct SynapseTable {
  std::vector<NeuronIndex> pre;
  std::vector<NeuronIndex> post;
  std::vector<double> weight;
  std::vector<double> eligibility;
  std::vector<std::uint8_t> plastic;
  std::vector<SynapseGroup> group;
  /// Index of the connection rule that created the synapse (for logging).
  std::vector<std::uint16_t> pathway;

  std::size_t size() const noexcept { return pre.size(); }
  void push_back(NeuronIndex from, NeuronIndex to, double w, bool is_plastic, SynapseGroup g,
                 std::uint16_t rule);
};

/// A population of Izhikevich neurons with 1 ms conduction delay on every
/// synapse. Single-threaded; instances share nothing.
class Network {
 public:
  Network(std::vector<NeuronGroup> groups, std::vector<NeuronParams> params);

  std::size_t neuron_count() const noexcept { return params_.size(); }
  const std::vector<NeuronGroup>& groups() const noexcept { return groups_; }
  const NeuronGroup& group(std::string_view name) const;

  /// Adds a synapse. Invalidates adjacency until the next step() or finalize().
  void add_synapse(NeuronIndex pre, NeuronIndex post, double weight, bool plastic = false,
                   SynapseGroup group = SynapseGroup::None, std::uint16_t pathway = 0);
  /// Removes every synapse for which `pred(i)` is true.
  template <class Pred>
  void remove_synapses_if(Pred pred);

  SynapseTable& synapses() noexcept { return syn_; }
  const SynapseTable& synapses() const noexcept { return syn_; }

  /// Reorders the synapse table so plastic synapses come first (ids
  /// 0..P-1, relative order kept) and builds the adjacency lists. Called
  /// lazily by step(); call it again after editing plastic flags through
  /// synapses(). Synapse ids taken before a finalize() are invalidated.
  void finalize();

  /// Adds current to neuron i for the current tick only.
  void inject(NeuronIndex i, double current);
  /// Adds currents[k] to neuron group.first + k.
  void inject(const NeuronGroup& group, std::span<const double> currents);
  void inject_all(const NeuronGroup& group, double current);

  /// Steps every neuron once at time t_ms and returns the spikes emitted.
  /// The external accumulator is cleared afterwards.
  const std::vector<SpikeEvent>& step(std::int64_t t_ms);

  const NeuronParams& params(NeuronIndex i) const { return params_[i]; }
  NeuronState state(NeuronIndex i) const;
  double v(NeuronIndex i) const { return v_[i]; }
  void set_state(NeuronIndex i, double v, double u);

  std::int64_t last_spike(NeuronIndex i) const noexcept { return last_spike_[i]; }
  std::span<const std::int64_t> last_spikes() const noexcept { return last_spike_; }

  /// Synapse ids leaving / entering neuron i that are plastic.
  std::span<const std::uint32_t> plastic_out(NeuronIndex i) const noexcept;
  std::span<const std::uint32_t> plastic_in(NeuronIndex i) const noexcept;
  const std::vector<std::uint32_t>& plastic_ids() const noexcept { return plastic_ids_; }

 private:
  std::vector<NeuronGroup> groups_;
  std::vector<NeuronParams> params_;
  std::vector<double> a_, b_, c_, d_;
  std::vector<double> v_;
  std::vector<double> u_;
  std::vector<double> spiked_;  // 1.0 for neurons that fired this tick
  std::vector<double> external_;
  std::vector<double> synaptic_now_;  // delivered on the next step()
  std::vector<std::int64_t> last_spike_;
  std::vector<SpikeEvent> fired_;

  SynapseTable syn_;
  bool dirty_ = true;
  // CSR over all synapses by pre-neuron.
  std::vector<std::uint32_t> out_offsets_;
  std::vector<std::uint32_t> out_ids_;
  // CSR over plastic synapses by pre and by post.
  std::vector<std::uint32_t> pout_offsets_;
  std::vector<std::uint32_t> pout_ids_;
  std::vector<std::uint32_t> pin_offsets_;
  std::vector<std::uint32_t> pin_ids_;
  std::vector<std::uint32_t> plastic_ids_;

  void check_index(NeuronIndex i) const;
  double integrate(std::size_t n) noexcept;
};

template <class Pred>
void Network::remove_synapses_if(Pred pred) {
  SynapseTable kept;
  for (std::size_t i = 0; i < syn_.size(); ++i) {
    if (pred(i)) continue;
    kept.push_back(syn_.pre[i], syn_.post[i], syn_.weight[i], syn_.plastic[i] != 0, syn_.group[i],
                   syn_.pathway[i]);
    kept.eligibility.back() = syn_.eligibility[i];
  }
  syn_ = std::move(kept);
  dirty_ = true;
}

/// Writes `time_ms,neuron_index` rows (with header) for raster plots.
void write_spikes_csv(std::ostream& out, std::span<const SpikeEvent> spikes, bool header = true);

}  // namespace neuroforage::snn
