#pragma once

#include <stdexcept>
#include <string>

namespace neuroforage {

/// Invalid scenario, blueprint or index supplied by the caller.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Internal numerical failure (non-finite state). Not recoverable.
class SimulationFault : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace neuroforage
