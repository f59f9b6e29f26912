#include "rs2/dqn.hpp"

#include <algorithm>
#include <stdexcept>

namespace rs2 {

DqnLearner::DqnLearner(Mlp net, DqnConfig cfg)
    : online_(std::move(net)),
      target_(online_),
      adam_(AdamState::init(online_, cfg.lr)),
      cfg_(cfg),
      grads_(Gradients::zeros_like(online_)) {
  if (cfg_.batch_size <= 0) {
    throw std::invalid_argument("DqnLearner: batch_size must be positive");
  }
}

std::vector<double> DqnLearner::td_targets(std::span<const Transition* const> batch) {
  if (batch.empty()) {
    throw std::invalid_argument("DqnLearner::td_targets: empty batch");
  }
  const int b = static_cast<int>(batch.size());
  const int in_dim = online_.input_dim();
  next_inputs_.resize(b, in_dim);
  for (int i = 0; i < b; ++i) {
    const auto& next = batch[i]->next_observation;
    if (static_cast<int>(next.size()) != in_dim) {
      throw std::invalid_argument("DqnLearner::td_targets: observation width mismatch");
    }
    std::copy(next.begin(), next.end(), next_inputs_.row(i).begin());
  }
  mlp_forward_batch(target_, next_inputs_, target_q_, target_ws_);

  std::vector<double> y(b);
  for (int i = 0; i < b; ++i) {
    const Transition& t = *batch[i];
    const auto q_next = target_q_.row(i);
    const double best = *std::max_element(q_next.begin(), q_next.end());
    const double bootstrap = t.done ? 0.0 : cfg_.discount * best;
    y[i] = t.reward_ext + cfg_.intrinsic_coef * t.reward_int + bootstrap;
  }
  return y;
}

double DqnLearner::update_on(std::span<const Transition* const> batch) {
  const std::vector<double> y = td_targets(batch);
  const int b = static_cast<int>(batch.size());
  inputs_.resize(b, online_.input_dim());
  std::vector<int> actions(b);
  for (int i = 0; i < b; ++i) {
    const auto& obs = batch[i]->observation;
    std::copy(obs.begin(), obs.end(), inputs_.row(i).begin());
    actions[i] = batch[i]->action;
  }
  const double loss = mlp_backward(online_, inputs_, actions, y, grads_, ws_);
  adam_step(adam_, online_, grads_);
  return loss;
}

std::optional<double> DqnLearner::update(const ReplayBuffer& buffer, Rng& rng) {
  if (buffer.size() < static_cast<std::size_t>(cfg_.batch_size)) {
    return std::nullopt;
  }
  const auto batch = buffer.sample(cfg_.batch_size, rng);
  return update_on(batch);
}

double greedy_episode_return(const Mlp& net, Env& env, Rng& rng) {
  std::vector<double> obs = env.reset(rng);
  double total = 0.0;
  while (!env.done()) {
    const ForwardTrace trace = mlp_forward(net, obs);
    StepResult r = env.step(argmax(trace.output()));
    total += r.reward;
    obs = std::move(r.observation);
  }
  return total;
}

double greedy_episode_return(const DqnLearner& learner, Env& env, Rng& rng) {
  return greedy_episode_return(learner.online(), env, rng);
}

}  // namespace rs2
