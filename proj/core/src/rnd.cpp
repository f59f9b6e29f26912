#include "rs2/rnd.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rs2 {

RndModule::RndModule(const std::vector<int>& dims, std::uint64_t target_seed,
                     std::uint64_t predictor_seed, double lr)
    : target_(mlp_init(dims, target_seed)),
      predictor_(mlp_init(dims, predictor_seed)),
      adam_(AdamState::init(predictor_, lr)),
      grads_(Gradients::zeros_like(predictor_)) {}

double RndModule::raw_error(std::span<const double> obs) const {
  const ForwardTrace t = mlp_forward(target_, obs);
  const ForwardTrace p = mlp_forward(predictor_, obs);
  return squared_distance(t.output(), p.output());
}

double RndModule::intrinsic(std::span<const double> obs) {
  const double raw = raw_error(obs);
  const double sd = running_std();
  const double bonus = raw / (sd > 0.0 ? sd : 1.0);
  count_ += 1;
  const double d1 = raw - mean_;
  mean_ += d1 / static_cast<double>(count_);
  m2_ += d1 * (raw - mean_);
  return bonus;
}

double RndModule::running_std() const {
  if (count_ < 2) return 0.0;
  return std::sqrt(m2_ / static_cast<double>(count_));
}

double RndModule::train_on(std::span<const Transition* const> batch) {
  if (batch.empty()) {
    throw std::invalid_argument("RndModule::train_on: empty batch");
  }
  const int b = static_cast<int>(batch.size());
  inputs_.resize(b, predictor_.input_dim());
  for (int i = 0; i < b; ++i) {
    const auto& obs = batch[i]->next_observation;
    if (static_cast<int>(obs.size()) != predictor_.input_dim()) {
      throw std::invalid_argument("RndModule::train_on: observation width mismatch");
    }
    std::copy(obs.begin(), obs.end(), inputs_.row(i).begin());
  }
  return train_on_observations(inputs_);
}

double RndModule::train_on_observations(const Mat& observations) {
  mlp_forward_batch(target_, observations, targets_, target_ws_);
  const double loss = mlp_backward_dense(predictor_, observations, targets_, grads_, ws_);
  adam_step(adam_, predictor_, grads_);
  return loss;
}

}  // namespace rs2
