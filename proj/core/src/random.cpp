#include "neuroforage/random.hpp"

#include <cmath>

namespace neuroforage {

PoissonTable::PoissonTable(double mean) : mean_(mean) {
  if (mean <= 0.0) return;
  double p = std::exp(-mean);
  double acc = p;
  cdf_.push_back(acc);
  for (int k = 1; 1.0 - acc > 1e-15 && k < 1000; ++k) {
    p *= mean / k;
    acc += p;
    cdf_.push_back(acc);
  }
}

}  // namespace neuroforage
