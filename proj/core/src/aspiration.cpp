#include "rs2/aspiration.hpp"

#include <algorithm>
#include <stdexcept>

namespace rs2 {

AspirationController::AspirationController(double global_aspiration, int window)
    : global_aspiration_(global_aspiration), window_(window) {
  if (!(global_aspiration > 0.0)) {
    throw std::invalid_argument("AspirationController: global aspiration must be positive");
  }
  if (window < 1) {
    throw std::invalid_argument("AspirationController: window must be positive");
  }
}

void AspirationController::record_return(double episode_return) {
  returns_.push_back(episode_return);
  sum_ += episode_return;
  if (static_cast<int>(returns_.size()) > window_) {
    sum_ -= returns_.front();
    returns_.pop_front();
  }
}

double AspirationController::value_estimate() const {
  if (returns_.empty()) return 0.0;
  return sum_ / static_cast<double>(returns_.size());
}

double AspirationController::beta() const {
  const double raw = (global_aspiration_ - value_estimate()) / global_aspiration_;
  return std::clamp(raw, 0.0, 1.0);
}

AspirationController::StateAspiration AspirationController::aspiration(std::span<const double> q_values) const {
  if (q_values.empty()) {
    throw std::invalid_argument("AspirationController::aspiration: empty action values");
  }
  const double b = beta();
  const double best = *std::max_element(q_values.begin(), q_values.end());
  return {b * global_aspiration_ + (1.0 - b) * best, b};
}

}  // namespace rs2
