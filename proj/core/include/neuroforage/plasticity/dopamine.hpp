#pragma once

#include <cstdint>
#include <deque>

namespace neuroforage::plasticity {

struct DopamineParams {
  double baseline = -0.0004;            ///< uM
  double per_spike_increment = 0.0035;  ///< uM per dopaminergic spike
  int burst_threshold = 5;              ///< release needs strictly more spikes in one tick
  bool thresholding = true;
  std::int64_t release_delay_ms = 5;
  double decay_time_constant_s = 0.2;
};

struct PendingRelease {
  std::int64_t due_ms = 0;
  double amount = 0.0;
};

/// Global dopamine concentration with delayed, burst-gated release and
/// exponential relaxation toward a (possibly negative) baseline.
class DopamineSystem {
 public:
  explicit DopamineSystem(DopamineParams params = {})
      : params_(params), level_(params.baseline) {}

  /// One 1 ms update. A burst (count above threshold, or any spike with
  /// thresholding off) enqueues count * increment, negated in poison
  /// context, due release_delay_ms later. Due releases are then applied and
  /// the level relaxes toward baseline. Returns the new level.
  double tick(int da_spike_count, bool is_poison_context, std::int64_t now_ms);

  double level() const noexcept { return level_; }
  void set_level(double level) noexcept { level_ = level; }
  const DopamineParams& params() const noexcept { return params_; }
  const std::deque<PendingRelease>& pending() const noexcept { return pending_; }

 private:
  DopamineParams params_;
  double level_;
  std::deque<PendingRelease> pending_;
};

}  // namespace neuroforage::plasticity
