#include "neuroforage/snn/izhikevich.hpp"

#include <cmath>
#include <string>

#include "neuroforage/errors.hpp"

namespace neuroforage::snn {

StepOutcome izhikevich_step(const NeuronState& state, const NeuronParams& params, double current,
                            std::int64_t now_ms) {
  StepOutcome out{state, false};
  out.spiked = advance_membrane(out.state.v, out.state.u, params, current);
  if (!std::isfinite(out.state.v) || !std::isfinite(out.state.u)) {
    throw SimulationFault("non-finite neuron state at t=" + std::to_string(now_ms) + "ms");
  }
  if (out.spiked) out.state.last_spike_time = now_ms;
  out.state.input_accumulator = 0.0;
  return out;
}

}  // namespace neuroforage::snn
