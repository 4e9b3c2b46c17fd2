#include "neuroforage/sensorimotor/sensorimotor.hpp"

namespace neuroforage::sensorimotor {

void PhasicSchedule::begin_window(std::int64_t t_ms, Rng& rng) {
  window_start_ms_ = t_ms;
  left_count_ = 0;
  right_count_ = 0;
  exploration_target_ = rng.coin() ? MotorSide::Left : MotorSide::Right;
}

void encode_range(double sensor_value, double gain, Rng& rng, std::span<double> out) {
  const double mean = sensor_value * gain;
  for (auto& c : out) c = mean > 0.0 ? static_cast<double>(rng.poisson(mean)) : 0.0;
}

namespace {

std::vector<double> range_group(double value, std::size_t n, double gain, Rng& rng) {
  if (value <= 0.0) return {};
  std::vector<double> out(n);
  encode_range(value, gain, rng, out);
  return out;
}

std::vector<double> touch_group(bool active, std::size_t n, double mean, Rng& rng) {
  if (!active) return {};
  std::vector<double> out(n);
  encode_range(1.0, mean, rng, out);
  return out;
}

}  // namespace

SensorCurrents encode_sensors(const world::SensorReadout& readout, bool range_phase,
                              std::size_t group_size, const SensorimotorParams& params, Rng& rng) {
  SensorCurrents out;
  if (range_phase) {
    out.left_food = range_group(readout.left_food, group_size, params.range_gain, rng);
    out.right_food = range_group(readout.right_food, group_size, params.range_gain, rng);
    out.left_container = range_group(readout.left_container, group_size, params.range_gain, rng);
    out.right_container = range_group(readout.right_container, group_size, params.range_gain, rng);
  }
  out.touch_food = touch_group(readout.touch_food, group_size, params.touch_mean, rng);
  out.touch_food_container =
      touch_group(readout.touch_food_container, group_size, params.touch_mean, rng);
  out.touch_empty_container =
      touch_group(readout.touch_empty_container, group_size, params.touch_mean, rng);
  return out;
}

WheelSpeeds decode_motors(int left_count, int right_count, const world::SpeedRegime& regime) noexcept {
  if (left_count > right_count) return {regime.v_max, regime.v_min};
  if (left_count < right_count) return {regime.v_min, regime.v_max};
  return {regime.mid(), regime.mid()};
}

void exploration_stimulus(const PoissonTable& table, Rng& rng, std::span<double> out) {
  for (auto& c : out) c = static_cast<double>(table(rng));
}

}  // namespace neuroforage::sensorimotor
