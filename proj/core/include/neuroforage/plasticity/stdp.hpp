#pragma once

#include <cmath>
#include <cstdint>
#include <optional>

namespace neuroforage::plasticity {

/// STDP window. Time constants in seconds.
struct StdpParams {
  double a_plus = 0.1;
  double a_minus = 0.15;
  double tau_plus = 0.02;
  double tau_minus = 0.11;

  bool valid() const noexcept {
    return a_plus > 0 && a_minus > 0 && tau_plus > 0 && tau_minus > 0;
  }
};

/// STDP(dt) for dt = t_post - t_pre in seconds: potentiation for dt >= 0,
/// depression for dt < 0.
inline double stdp_value(double delta_t_s, const StdpParams& p) noexcept {
  if (delta_t_s >= 0.0) return p.a_plus * std::exp(-delta_t_s / p.tau_plus);
  return -p.a_minus * std::exp(delta_t_s / p.tau_minus);
}

enum class SpikeSide : std::uint8_t { Pre, Post };

/// Nearest-neighbour eligibility increment for one synapse when one side
/// fires at now_ms. `opposite_last_spike_ms` is the most recent spike of the
/// other side; without one the trace is left unchanged. No weight changes here.
inline void on_spike_update_eligibility(double& eligibility, SpikeSide side, std::int64_t now_ms,
                                        std::optional<std::int64_t> opposite_last_spike_ms,
                                        const StdpParams& p) noexcept {
  if (!opposite_last_spike_ms) return;
  const std::int64_t dt_ms = side == SpikeSide::Post ? now_ms - *opposite_last_spike_ms
                                                     : *opposite_last_spike_ms - now_ms;
  eligibility += stdp_value(static_cast<double>(dt_ms) * 1e-3, p);
}

}  // namespace neuroforage::plasticity
