#include "rs2/replay.hpp"

#include <stdexcept>

namespace rs2 {

ReplayBuffer::ReplayBuffer(std::size_t capacity) : slots_(capacity) {
  if (capacity == 0) {
    throw std::invalid_argument("ReplayBuffer: capacity must be positive");
  }
}

void ReplayBuffer::store(Transition t) {
  slots_[next_] = std::move(t);
  next_ = (next_ + 1) % slots_.size();
  if (size_ < slots_.size()) size_ += 1;
}

const Transition& ReplayBuffer::at(std::size_t i) const {
  if (i >= size_) {
    throw std::out_of_range("ReplayBuffer::at: index past stored transitions");
  }
  const std::size_t oldest = (size_ == slots_.size()) ? next_ : 0;
  return slots_[(oldest + i) % slots_.size()];
}

std::vector<const Transition*> ReplayBuffer::sample(std::size_t n, Rng& rng) const {
  if (size_ == 0) {
    throw std::logic_error("ReplayBuffer::sample: buffer is empty");
  }
  std::uniform_int_distribution<std::size_t> pick(0, size_ - 1);
  std::vector<const Transition*> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(&at(pick(rng)));
  }
  return out;
}

}  // namespace rs2
