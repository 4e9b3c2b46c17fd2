#pragma once

#include <cmath>
#include <cstdint>
#include <optional>

namespace neuroforage::snn {

inline constexpr double kSpikeThreshold = 30.0;

struct NeuronParams {
  double a = 0.02;  ///< recovery time scale
  double b = 0.2;   ///< recovery sensitivity to v
  double c = -65.0; ///< reset potential (mV)
  double d = 8.0;   ///< reset increment of u
};

/// Which excitatory (a, b) assignment to use: regular spiking (a=0.02,
/// b=0.2) or the transposed pair a=0.2, b=0.02.
enum class ExcitatoryParamSet { Canonical, Literal };

/// Excitatory cell with heterogeneity r in [0, 1].
constexpr NeuronParams excitatory_params(double r, ExcitatoryParamSet set = ExcitatoryParamSet::Canonical) {
  const double r2 = r * r;
  if (set == ExcitatoryParamSet::Literal) return {0.2, 0.02, -65.0 + 15.0 * r2, 8.0 - 6.0 * r2};
  return {0.02, 0.2, -65.0 + 15.0 * r2, 8.0 - 6.0 * r2};
}

constexpr NeuronParams inhibitory_params(double r) {
  const double r2 = r * r;
  return {0.1, 0.2, -65.0 + 15.0 * r2, 8.0 - 6.0 * r2};
}

struct NeuronState {
  double v = -65.0;
  double u = -13.0;
  double input_accumulator = 0.0;
  std::optional<std::int64_t> last_spike_time;
};

/// Resting state for the given parameters (v = -65, u = b v).
inline NeuronState resting_state(const NeuronParams& p) {
  NeuronState s;
  s.v = -65.0;
  s.u = p.b * s.v;
  return s;
}

/// One 1 ms tick: v takes two 0.5 ms Euler steps, u one 1 ms step. The
/// threshold is checked before integration and after each half step; on a
/// crossing v <- c, u <- u + d and the tick ends. Returns true on a spike.
inline bool advance_membrane(double& v, double& u, const NeuronParams& p, double current) noexcept {
  if (v >= kSpikeThreshold) {
    v = p.c;
    u += p.d;
    return true;
  }
  for (int half = 0; half < 2; ++half) {
    v += 0.5 * (0.04 * v * v + 5.0 * v + 140.0 - u + current);
    if (v >= kSpikeThreshold) {
      v = p.c;
      u += p.d;
      return true;
    }
  }
  u += p.a * (p.b * v - u);
  return false;
}

struct StepOutcome {
  NeuronState state;
  bool spiked = false;
};

/// Value-semantics single-neuron step. Throws SimulationFault if the state
/// becomes non-finite. `now_ms` stamps last_spike_time on a spike.
StepOutcome izhikevich_step(const NeuronState& state, const NeuronParams& params, double current,
                            std::int64_t now_ms = 0);

}  // namespace neuroforage::snn
