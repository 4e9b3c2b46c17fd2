#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "neuroforage/random.hpp"
#include "neuroforage/world/world.hpp"

namespace neuroforage::sensorimotor {

enum class MotorSide : std::uint8_t { Left, Right };

struct SensorimotorParams {
  std::int64_t period_ms = 70;
  double range_gain = 30.0;       ///< Poisson mean per unit sensor value
  double touch_mean = 12.0;       ///< Poisson mean of a touch pulse
  double exploration_mean = 2.35; ///< Poisson mean per tick into the chosen motor group
  bool exploration = true;
};

/// Fixed-period sense/act windows. Motor spike counts accumulate over a
/// window and are decoded at the next boundary.
class PhasicSchedule {
 public:
  explicit PhasicSchedule(std::int64_t period_ms = 70) : period_ms_(period_ms) {}

  std::int64_t period_ms() const noexcept { return period_ms_; }
  bool is_boundary(std::int64_t t_ms) const noexcept { return t_ms % period_ms_ == 0; }
  std::int64_t window_start_ms() const noexcept { return window_start_ms_; }

  /// Resets the counters and draws this window's exploration target.
  void begin_window(std::int64_t t_ms, Rng& rng);

  void record_motor_spikes(int left, int right) noexcept {
    left_count_ += left;
    right_count_ += right;
  }
  int left_count() const noexcept { return left_count_; }
  int right_count() const noexcept { return right_count_; }
  MotorSide exploration_target() const noexcept { return exploration_target_; }

 private:
  std::int64_t period_ms_;
  std::int64_t window_start_ms_ = 0;
  int left_count_ = 0;
  int right_count_ = 0;
  MotorSide exploration_target_ = MotorSide::Left;
};

/// Per-group currents for one tick. Empty vectors mean no injection.
struct SensorCurrents {
  std::vector<double> left_food, right_food;
  std::vector<double> left_container, right_container;
  std::vector<double> touch_food, touch_food_container, touch_empty_container;
};

/// Independent Poisson(value * gain) current per neuron; all zero if value is 0.
void encode_range(double sensor_value, double gain, Rng& rng, std::span<double> out);

/// Encodes a readout for one tick. Range sensors are encoded only when
/// `range_phase` (first tick of a window); touch flags are encoded whenever set.
SensorCurrents encode_sensors(const world::SensorReadout& readout, bool range_phase,
                              std::size_t group_size, const SensorimotorParams& params, Rng& rng);

struct WheelSpeeds {
  double v_left = 0.0;
  double v_right = 0.0;
};

/// Winner-takes-all decoding: the busier motor group drives its wheel at
/// v_max, the other at v_min; ties give both the midpoint.
WheelSpeeds decode_motors(int left_count, int right_count, const world::SpeedRegime& regime) noexcept;

/// Exploration drive for one tick: Poisson draws into the target group.
void exploration_stimulus(const PoissonTable& table, Rng& rng, std::span<double> out);

}  // namespace neuroforage::sensorimotor
