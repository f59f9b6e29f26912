#pragma once

#include <deque>
#include <span>

namespace rs2 {

// Blends a global aspiration (target return for the whole task) into a
// per-state one. beta measures how far recent returns still are from the
// global target; early in training aleph(s) is the global aspiration, and as
// returns approach it the state's own value estimate takes over.
class AspirationController {
 public:
  AspirationController(double global_aspiration, int window = 100);

  // Feed one finished episode's (undiscounted) behaviour return.
  void record_return(double episode_return);

  // Mean of the recorded returns in the window; 0 before the first episode.
  double value_estimate() const;

  // clamp((aleph_G - V_G) / aleph_G, 0, 1)
  double beta() const;

  struct StateAspiration {
    double aleph;
    double beta;
  };

  // aleph(s) = beta * aleph_G + (1 - beta) * max_a q(a)
  StateAspiration aspiration(std::span<const double> q_values) const;

  double global_aspiration() const { return global_aspiration_; }
  int window() const { return window_; }

 private:
  double global_aspiration_;
  int window_;
  std::deque<double> returns_;
  double sum_ = 0.0;
};

}  // namespace rs2
