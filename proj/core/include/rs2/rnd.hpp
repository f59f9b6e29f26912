#pragma once

#include <span>

#include "rs2/mlp.hpp"
#include "rs2/replay.hpp"

namespace rs2 {

// Curiosity bonus from predicting a frozen random network: the squared
// prediction error is large on observations unlike anything trained on and
// shrinks as the predictor catches up. Bonuses are normalised by the running
// standard deviation of all raw errors seen so far.
class RndModule {
 public:
  RndModule(const std::vector<int>& dims, std::uint64_t target_seed,
            std::uint64_t predictor_seed, double lr = 1e-3);

  // ||target(obs) - predictor(obs)||^2, no normalisation, no recording.
  double raw_error(std::span<const double> obs) const;

  // Normalised bonus for one observation; records the raw error into the
  // running statistics afterwards, so the divisor only reflects the past.
  double intrinsic(std::span<const double> obs);

  // One Adam step regressing the predictor onto the frozen target at the
  // batch's next observations; returns the minibatch loss.
  double train_on(std::span<const Transition* const> batch);
  double train_on_observations(const Mat& observations);

  const Mlp& target() const { return target_; }
  const Mlp& predictor() const { return predictor_; }
  long long recorded_count() const { return count_; }
  double running_std() const;

 private:
  Mlp target_;
  Mlp predictor_;
  AdamState adam_;
  Gradients grads_;
  MlpWorkspace ws_;
  MlpWorkspace target_ws_;
  Mat inputs_;
  Mat targets_;
  // Welford accumulator over raw errors.
  long long count_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

}  // namespace rs2
