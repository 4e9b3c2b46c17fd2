#include "neuroforage/experiments/calibration.hpp"

#include <cmath>
#include <vector>

#include "neuroforage/experiments/blueprint.hpp"
#include "neuroforage/random.hpp"
#include "neuroforage/snn/network.hpp"

namespace neuroforage::experiments {

double dopamine_background_rate(const DopamineDrive& drive, double seconds, std::uint64_t seed,
                                std::uint32_t neurons, snn::ExcitatoryParamSet set) {
  Rng rng(seed);
  std::vector<snn::NeuronParams> params;
  for (std::uint32_t i = 0; i < neurons; ++i) params.push_back(snn::excitatory_params(rng.uniform(), set));
  snn::Network net({{std::string(group_names::kDopamine), snn::NeuronKind::Dopaminergic, 0, neurons}},
                   std::move(params));
  const auto& group = net.group(group_names::kDopamine);
  std::vector<double> cur(neurons);
  const auto ticks = static_cast<std::int64_t>(std::llround(seconds * 1000.0));
  std::uint64_t spikes = 0;
  for (std::int64_t t = 0; t < ticks; ++t) {
    for (auto& c : cur) c = drive.sample(rng);
    net.inject(group, cur);
    spikes += net.step(t).size();
  }
  return static_cast<double>(spikes) / (static_cast<double>(neurons) * seconds);
}

CalibrationResult calibrate_dopamine_noise(double target_hz, DopamineDrive drive, double lo,
                                           double hi, double seconds, std::uint64_t seed,
                                           double tolerance_hz, int max_iterations) {
  CalibrationResult best;
  for (int it = 1; it <= max_iterations; ++it) {
    drive.noise_sd = 0.5 * (lo + hi);
    const double rate = dopamine_background_rate(drive, seconds, seed);
    best = {drive.noise_sd, rate, it};
    if (std::abs(rate - target_hz) <= tolerance_hz) break;
    (rate < target_hz ? lo : hi) = drive.noise_sd;
  }
  return best;
}

}  // namespace neuroforage::experiments
