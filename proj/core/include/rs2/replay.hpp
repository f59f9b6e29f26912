#pragma once

#include <cstddef>
#include <vector>

#include "rs2/rng.hpp"

namespace rs2 {

struct Transition {
  std::vector<double> observation;
  int action = 0;
  double reward_ext = 0.0;
  double reward_int = 0.0;
  std::vector<double> next_observation;
  bool done = false;
};

// Fixed-capacity ring buffer; once full, each store overwrites the oldest
// transition. Sampling is uniform with replacement.
class ReplayBuffer {
 public:
  explicit ReplayBuffer(std::size_t capacity);

  void store(Transition t);
  std::size_t size() const { return size_; }
  std::size_t capacity() const { return slots_.size(); }

  // i = 0 is the oldest transition currently held.
  const Transition& at(std::size_t i) const;

  std::vector<const Transition*> sample(std::size_t n, Rng& rng) const;

 private:
  std::vector<Transition> slots_;
  std::size_t next_ = 0;
  std::size_t size_ = 0;
};

}  // namespace rs2
