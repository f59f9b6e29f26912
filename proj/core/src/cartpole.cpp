#include "rs2/cartpole.hpp"

#include <cmath>
#include <stdexcept>

namespace rs2 {

CartPoleState cartpole_dynamics(const CartPoleState& s, double force) {
  constexpr double total_mass = CartPoleEnv::kCartMass + CartPoleEnv::kPoleMass;
  constexpr double polemass_length = CartPoleEnv::kPoleMass * CartPoleEnv::kPoleHalfLength;

  const double cos_t = std::cos(s.theta);
  const double sin_t = std::sin(s.theta);
  const double temp = (force + polemass_length * s.theta_dot * s.theta_dot * sin_t) / total_mass;
  const double theta_acc =
      (CartPoleEnv::kGravity * sin_t - cos_t * temp) /
      (CartPoleEnv::kPoleHalfLength *
       (4.0 / 3.0 - CartPoleEnv::kPoleMass * cos_t * cos_t / total_mass));
  const double x_acc = temp - polemass_length * theta_acc * cos_t / total_mass;

  CartPoleState out;
  out.x = s.x + CartPoleEnv::kTau * s.x_dot;
  out.x_dot = s.x_dot + CartPoleEnv::kTau * x_acc;
  out.theta = s.theta + CartPoleEnv::kTau * s.theta_dot;
  out.theta_dot = s.theta_dot + CartPoleEnv::kTau * theta_acc;
  return out;
}

std::vector<double> CartPoleEnv::reset(Rng& rng) {
  std::uniform_real_distribution<double> dist(-0.05, 0.05);
  state_.x = dist(rng);
  state_.x_dot = dist(rng);
  state_.theta = dist(rng);
  state_.theta_dot = dist(rng);
  steps_ = 0;
  done_ = false;
  return {state_.x, state_.x_dot, state_.theta, state_.theta_dot};
}

StepResult CartPoleEnv::step(int action) {
  if (done_) {
    throw std::logic_error("CartPoleEnv::step: episode already finished");
  }
  if (action != 0 && action != 1) {
    throw std::invalid_argument("CartPoleEnv::step: action must be 0 or 1");
  }
  const double force = (action == 1) ? kForce : -kForce;
  state_ = cartpole_dynamics(state_, force);
  steps_ += 1;

  const bool out_of_bounds =
      state_.x < -kXLimit || state_.x > kXLimit ||
      state_.theta < -kThetaLimitRad || state_.theta > kThetaLimitRad;
  done_ = out_of_bounds || steps_ >= max_steps_;

  StepResult r;
  r.observation = {state_.x, state_.x_dot, state_.theta, state_.theta_dot};
  r.reward = 1.0;
  r.done = done_;
  return r;
}

}  // namespace rs2
