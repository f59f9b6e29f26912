#pragma once

#include <optional>

#include "rs2/aspiration.hpp"
#include "rs2/mlp.hpp"
#include "rs2/reliability.hpp"

namespace rs2 {

struct EpsilonSchedule {
  enum class Mode { Constant, ExponentialDecay };

  Mode mode = Mode::Constant;
  double start = 0.1;
  double end = 0.1;
  int total_episodes = 1;

  // Exploration rate for a (0-based) episode index:
  //   start * (end/start)^(episode / total_episodes), clamped to the horizon.
  double value(int episode) const;
};

// Maps the online net's forward pass at the current observation to an
// action. Stateful variants hear about episode boundaries and returns.
class BehaviorPolicy {
 public:
  virtual ~BehaviorPolicy() = default;
  virtual int behave(const ForwardTrace& trace, Rng& rng) = 0;
  virtual void begin_episode(int episode) {}
  virtual void record_episode_return(double episode_return) {}
  // Aspiration mixing weight, when the policy has one (logged per episode).
  virtual std::optional<double> beta() const { return std::nullopt; }
};

class EpsilonGreedyPolicy final : public BehaviorPolicy {
 public:
  explicit EpsilonGreedyPolicy(EpsilonSchedule schedule) : schedule_(schedule) {}

  int behave(const ForwardTrace& trace, Rng& rng) override;
  void begin_episode(int episode) override { episode_ = episode; }
  double current_epsilon() const { return schedule_.value(episode_); }

 private:
  EpsilonSchedule schedule_;
  int episode_ = 0;
};

// Satisficing policy: reliability-weighted action values when some action
// already meets the state's aspiration, shortfall-seeking exploration values
// otherwise; either way the action is sampled through a softmax.
class Rs2Policy final : public BehaviorPolicy {
 public:
  struct Params {
    ReliabilityEstimator::Params reliability;
    double temperature = 1.0;
    double eps_div = 1e-12;        // guards the exploration-mode rescaling
    bool decay_per_episode = false;  // otherwise counts decay every selection
  };

  Rs2Policy(int action_count, int latent_dim, double global_aspiration, int window,
            Params params, Rng& init_rng);

  int behave(const ForwardTrace& trace, Rng& rng) override;
  void record_episode_return(double episode_return) override;
  std::optional<double> beta() const override { return aspiration_.beta(); }

  const ReliabilityEstimator& estimator() const { return estimator_; }
  ReliabilityEstimator& estimator_mut() { return estimator_; }
  const AspirationController& aspiration() const { return aspiration_; }

 private:
  ReliabilityEstimator estimator_;
  AspirationController aspiration_;
  Params params_;
};

}  // namespace rs2
