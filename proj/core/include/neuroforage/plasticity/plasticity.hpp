#pragma once

#include <cstdint>
#include <span>

#include "neuroforage/plasticity/dopamine.hpp"
#include "neuroforage/plasticity/stdp.hpp"
#include "neuroforage/snn/network.hpp"

namespace neuroforage::plasticity {

struct PlasticityParams {
  StdpParams stdp;
  double eligibility_tau_s = 0.476;
  double weight_min = 0.0;
  double weight_max = 4.0;
  double dampening_threshold = 2.0;  ///< group mean above which dampening fires
  double dampening_step = 0.1;
  bool enabled = true;
};

/// Eligibility jumps for plastic synapses touched by this tick's spikes.
/// Pre-side updates skip a post spike in the same tick; that pairing is
/// counted once, by the post side, with dt = 0.
void apply_spike_pairings(snn::Network& net, std::span<const snn::SpikeEvent> spikes,
                          std::int64_t now_ms, const StdpParams& params);

/// c <- c (1 - dt / tau_c) over the plastic synapses.
void decay_eligibility(snn::SynapseTable& syn, std::span<const std::uint32_t> plastic_ids,
                       double tau_c_s, double dt_ms = 1.0);

/// w <- clamp(w + c d dt, [w_min, w_max]) over the plastic synapses.
void apply_dopamine_to_weights(snn::SynapseTable& syn, std::span<const std::uint32_t> plastic_ids,
                               double da_level, double w_min, double w_max, double dt_ms = 1.0);

/// Weight update followed by eligibility decay, fused into one pass.
void apply_dopamine_and_decay(snn::SynapseTable& syn, std::span<const std::uint32_t> plastic_ids,
                              double da_level, double w_min, double w_max, double tau_c_s,
                              double dt_ms = 1.0);

/// Mean weight of the plastic members of a dampening group (0 if empty).
double group_mean_weight(const snn::SynapseTable& syn, std::span<const std::uint32_t> plastic_ids,
                         snn::SynapseGroup group);

/// If the group's mean plastic weight exceeds the threshold, lowers every
/// plastic member by `step` and clamps at w_min. Returns true if it fired.
bool homeostatic_dampen(snn::SynapseTable& syn, std::span<const std::uint32_t> plastic_ids,
                        snn::SynapseGroup group, double threshold = 2.0, double step = 0.1,
                        double w_min = 0.0);

}  // namespace neuroforage::plasticity
