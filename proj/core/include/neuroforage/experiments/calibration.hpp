#pragma once

#include <cstdint>

#include "neuroforage/experiments/scenario.hpp"
#include "neuroforage/snn/izhikevich.hpp"

namespace neuroforage::experiments {

/// Mean firing rate (Hz) of an isolated population of `neurons`
/// dopaminergic neurons under the given tonic drive.
double dopamine_background_rate(const DopamineDrive& drive, double seconds, std::uint64_t seed,
                                std::uint32_t neurons = 40,
                                snn::ExcitatoryParamSet set = snn::ExcitatoryParamSet::Canonical);

struct CalibrationResult {
  double noise_sd = 0.0;
  double rate_hz = 0.0;
  int iterations = 0;
};

/// Bisects the noise amplitude (constant part held fixed) until the
/// background rate is within `tolerance_hz` of the target. Every evaluation
/// reuses the same seed so the rate is a deterministic function of the
/// amplitude.
CalibrationResult calibrate_dopamine_noise(double target_hz, DopamineDrive drive, double lo,
                                           double hi, double seconds = 200.0,
                                           std::uint64_t seed = 1, double tolerance_hz = 0.02,
                                           int max_iterations = 40);

}  // namespace neuroforage::experiments
