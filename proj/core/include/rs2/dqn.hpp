#pragma once

#include <optional>
#include <span>

#include "rs2/env.hpp"
#include "rs2/mlp.hpp"
#include "rs2/replay.hpp"

namespace rs2 {

struct DqnConfig {
  double discount = 0.99;
  double lr = 1e-3;
  int batch_size = 64;
  int target_sync_interval = 200;
  double intrinsic_coef = 1.0;
};

// Q-learning on a replay buffer with a periodically synced target net.
// Bootstrap targets come from the target net; the online net is regressed
// onto them at the taken action only.
class DqnLearner {
 public:
  DqnLearner(Mlp net, DqnConfig cfg);

  const Mlp& online() const { return online_; }
  const Mlp& target() const { return target_; }
  Mlp& online_mut() { return online_; }
  const DqnConfig& config() const { return cfg_; }

  // y_i = r_ext + c * r_int + discount * max_a Q_target(s', a) * (1 - done)
  std::vector<double> td_targets(std::span<const Transition* const> batch);

  // One Adam step on the given batch; returns the minibatch loss.
  double update_on(std::span<const Transition* const> batch);

  // Samples a minibatch and updates; nullopt while the buffer holds fewer
  // than batch_size transitions.
  std::optional<double> update(const ReplayBuffer& buffer, Rng& rng);

  void sync_target() { target_ = online_; }

 private:
  Mlp online_;
  Mlp target_;
  AdamState adam_;
  DqnConfig cfg_;
  Gradients grads_;
  MlpWorkspace ws_;
  MlpWorkspace target_ws_;
  Mat inputs_;
  Mat next_inputs_;
  Mat target_q_;
};

// Return of one episode played greedily (ties to the lowest action index).
double greedy_episode_return(const Mlp& net, Env& env, Rng& rng);
double greedy_episode_return(const DqnLearner& learner, Env& env, Rng& rng);

}  // namespace rs2
