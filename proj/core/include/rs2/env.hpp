#pragma once

#include <vector>

#include "rs2/rng.hpp"

namespace rs2 {

struct StepResult {
  std::vector<double> observation;
  double reward = 0.0;
  bool done = false;
};

// Episodic environment with a fixed discrete action set. step() after the
// episode has ended is a logic error and throws.
class Env {
 public:
  virtual ~Env() = default;
  virtual int action_count() const = 0;
  virtual int observation_dim() const = 0;
  virtual std::vector<double> reset(Rng& rng) = 0;
  virtual StepResult step(int action) = 0;
  virtual bool done() const = 0;
};

}  // namespace rs2
