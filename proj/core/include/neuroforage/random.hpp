#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace neuroforage {

/// SplitMix64 finalizer. Used to expand a batch seed into per-trial seeds.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Counter-based seed for trial `index` of a batch. Trial i's seed does not
/// depend on how many trials the batch has, so batches can be extended.
constexpr std::uint64_t derive_trial_seed(std::uint64_t batch_seed, std::uint64_t index) noexcept {
  return splitmix64(splitmix64(batch_seed) ^ splitmix64(index + 0x632BE59BD9B4E019ULL)) &
         0x7FFFFFFFFFFFFFFFULL;
}

/// The single entropy source owned by a trial.
class Rng {
 public:
  using engine_type = std::mt19937_64;

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1) with 53 bits of resolution.
  double uniform() noexcept { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }
  bool coin() noexcept { return (engine_() >> 63) != 0; }
  bool bernoulli(double p) noexcept { return uniform() < p; }

  int poisson(double mean) {
    if (mean <= 0.0) return 0;
    std::poisson_distribution<int> dist(mean);
    return dist(engine_);
  }

  double normal() { return normal_(engine_); }

  engine_type& engine() noexcept { return engine_; }

 private:
  engine_type engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

/// Inverse-CDF Poisson sampler for a fixed mean; the hot per-tick draws
/// (exploration drive) go through this instead of std::poisson_distribution.
class PoissonTable {
 public:
  PoissonTable() = default;
  explicit PoissonTable(double mean);

  double mean() const noexcept { return mean_; }

  int operator()(Rng& rng) const noexcept {
    if (cdf_.empty()) return 0;
    const double x = rng.uniform();
    int k = 0;
    const int n = static_cast<int>(cdf_.size());
    while (k < n && x >= cdf_[static_cast<std::size_t>(k)]) ++k;
    return k;
  }

 private:
  double mean_ = 0.0;
  std::vector<double> cdf_;
};

}  // namespace neuroforage
