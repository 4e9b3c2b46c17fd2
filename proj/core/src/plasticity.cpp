#include "neuroforage/plasticity/plasticity.hpp"

#include <algorithm>

#include "clones.hpp"

namespace neuroforage::plasticity {

void apply_spike_pairings(snn::Network& net, std::span<const snn::SpikeEvent> spikes,
                          std::int64_t now_ms, const StdpParams& params) {
  auto& syn = net.synapses();
  const auto last = net.last_spikes();
  for (const auto& ev : spikes) {
    for (auto id : net.plastic_out(ev.neuron_index)) {
      const auto t_post = last[syn.post[id]];
      if (t_post == snn::kNever || t_post == now_ms) continue;
      on_spike_update_eligibility(syn.eligibility[id], SpikeSide::Pre, now_ms, t_post, params);
    }
    for (auto id : net.plastic_in(ev.neuron_index)) {
      const auto t_pre = last[syn.pre[id]];
      if (t_pre == snn::kNever) continue;
      on_spike_update_eligibility(syn.eligibility[id], SpikeSide::Post, now_ms, t_pre, params);
    }
  }
}

void decay_eligibility(snn::SynapseTable& syn, std::span<const std::uint32_t> plastic_ids,
                       double tau_c_s, double dt_ms) {
  const double keep = 1.0 - dt_ms * 1e-3 / tau_c_s;
  double* c = syn.eligibility.data();
  for (auto id : plastic_ids) c[id] *= keep;
}

void apply_dopamine_to_weights(snn::SynapseTable& syn, std::span<const std::uint32_t> plastic_ids,
                               double da_level, double w_min, double w_max, double dt_ms) {
  double* w = syn.weight.data();
  const double* c = syn.eligibility.data();
  for (auto id : plastic_ids) w[id] = std::clamp(w[id] + c[id] * da_level * dt_ms, w_min, w_max);
}

namespace {

NEUROFORAGE_CLONES void contiguous_update(double* __restrict w, double* __restrict c, std::size_t n,
                                          double gain, double keep, double w_min,
                                          double w_max) noexcept {
  for (std::size_t i = 0; i < n; ++i) {
    w[i] = std::min(std::max(w[i] + c[i] * gain, w_min), w_max);
    c[i] *= keep;
  }
}

}  // namespace

void apply_dopamine_and_decay(snn::SynapseTable& syn, std::span<const std::uint32_t> plastic_ids,
                              double da_level, double w_min, double w_max, double tau_c_s,
                              double dt_ms) {
  const double keep = 1.0 - dt_ms * 1e-3 / tau_c_s;
  const double gain = da_level * dt_ms;
  double* w = syn.weight.data();
  double* c = syn.eligibility.data();
  const std::size_t n = plastic_ids.size();
  if (n > 0 && plastic_ids.front() == 0 && plastic_ids.back() == n - 1) {
    // Contiguous ids (the layout finalize() produces).
    contiguous_update(w, c, n, gain, keep, w_min, w_max);
    return;
  }
  for (auto id : plastic_ids) {
    w[id] = std::clamp(w[id] + c[id] * gain, w_min, w_max);
    c[id] *= keep;
  }
}

double group_mean_weight(const snn::SynapseTable& syn, std::span<const std::uint32_t> plastic_ids,
                         snn::SynapseGroup group) {
  double sum = 0.0;
  std::size_t n = 0;
  for (auto id : plastic_ids) {
    if (syn.group[id] != group) continue;
    sum += syn.weight[id];
    ++n;
  }
  return n == 0 ? 0.0 : sum / static_cast<double>(n);
}

bool homeostatic_dampen(snn::SynapseTable& syn, std::span<const std::uint32_t> plastic_ids,
                        snn::SynapseGroup group, double threshold, double step, double w_min) {
  if (group == snn::SynapseGroup::None) return false;
  if (group_mean_weight(syn, plastic_ids, group) <= threshold) return false;
  for (auto id : plastic_ids) {
    if (syn.group[id] == group) syn.weight[id] = std::max(w_min, syn.weight[id] - step);
  }
  return true;
}

}  // namespace neuroforage::plasticity
