#pragma once

#include <array>

#include "rs2/env.hpp"

namespace rs2 {

struct CartPoleState {
  double x = 0.0;
  double x_dot = 0.0;
  double theta = 0.0;
  double theta_dot = 0.0;
};

// One Euler step of the cart-pole dynamics under a horizontal force on the
// cart. Positions are advanced with the old velocities, then velocities with
// the new accelerations.
CartPoleState cartpole_dynamics(const CartPoleState& s, double force);

// Classic pole-balancing task: actions 0/1 push the cart left/right, reward
// is 1 per step (including the terminating one), episodes end when the cart
// leaves +-2.4, the pole tips past 12 degrees, or the step cap is hit.
class CartPoleEnv final : public Env {
 public:
  static constexpr double kGravity = 9.8;
  static constexpr double kCartMass = 1.0;
  static constexpr double kPoleMass = 0.1;
  static constexpr double kPoleHalfLength = 0.5;
  static constexpr double kForce = 10.0;
  static constexpr double kTau = 0.02;
  static constexpr double kXLimit = 2.4;
  static constexpr double kThetaLimitRad = 12.0 * 3.14159265358979323846 / 180.0;

  explicit CartPoleEnv(int max_steps = 200) : max_steps_(max_steps) {}

  int action_count() const override { return 2; }
  int observation_dim() const override { return 4; }
  std::vector<double> reset(Rng& rng) override;
  StepResult step(int action) override;
  bool done() const override { return done_; }

  const CartPoleState& state() const { return state_; }
  int steps_taken() const { return steps_; }

 private:
  CartPoleState state_;
  int max_steps_;
  int steps_ = 0;
  bool done_ = true;
};

}  // namespace rs2
