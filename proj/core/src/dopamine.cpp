#include "neuroforage/plasticity/dopamine.hpp"

namespace neuroforage::plasticity {

double DopamineSystem::tick(int da_spike_count, bool is_poison_context, std::int64_t now_ms) {
  const bool burst = params_.thresholding ? da_spike_count > params_.burst_threshold
                                          : da_spike_count > 0;
  if (burst) {
    double amount = da_spike_count * params_.per_spike_increment;
    if (is_poison_context) amount = -amount;
    pending_.push_back({now_ms + params_.release_delay_ms, amount});
  }
  while (!pending_.empty() && pending_.front().due_ms <= now_ms) {
    level_ += pending_.front().amount;
    pending_.pop_front();
  }
  level_ += (params_.baseline - level_) * (1e-3 / params_.decay_time_constant_s);
  return level_;
}

}  // namespace neuroforage::plasticity
