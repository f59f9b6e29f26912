#include "rs2/policy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rs2/satisficing.hpp"

namespace rs2 {

double EpsilonSchedule::value(int episode) const {
  if (mode == Mode::Constant) return start;
  if (!(start > 0.0) || !(end > 0.0)) {
    throw std::logic_error("EpsilonSchedule: exponential decay needs positive endpoints");
  }
  if (total_episodes < 1) {
    throw std::logic_error("EpsilonSchedule: exponential decay needs a horizon");
  }
  const int e = std::clamp(episode, 0, total_episodes);
  const double t = static_cast<double>(e) / static_cast<double>(total_episodes);
  return start * std::pow(end / start, t);
}

int EpsilonGreedyPolicy::behave(const ForwardTrace& trace, Rng& rng) {
  const int actions = static_cast<int>(trace.output().size());
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  if (unit(rng) < schedule_.value(episode_)) {
    std::uniform_int_distribution<int> pick(0, actions - 1);
    return pick(rng);
  }
  return argmax(trace.output());
}

Rs2Policy::Rs2Policy(int action_count, int latent_dim, double global_aspiration, int window,
                     Params params, Rng& init_rng)
    : estimator_(action_count, latent_dim, params.reliability, init_rng),
      aspiration_(global_aspiration, window),
      params_(params) {}

int Rs2Policy::behave(const ForwardTrace& trace, Rng& rng) {
  const std::vector<double>& q = trace.output();
  const std::vector<double>& z = trace.last_hidden();
  const std::vector<double> rho = estimator_.reliability(z);
  const auto [aleph, beta] = aspiration_.aspiration(q);
  const std::vector<double> scores = satisficed(q, aleph)
                                         ? rs2_values(q, rho, aleph)
                                         : srs_values(q, rho, aleph, params_.eps_div);
  const int action = select_action(scores, rng, params_.temperature);
  estimator_.update(z, action, /*decay_now=*/!params_.decay_per_episode);
  return action;
}

void Rs2Policy::record_episode_return(double episode_return) {
  aspiration_.record_return(episode_return);
  if (params_.decay_per_episode) estimator_.decay();
}

}  // namespace rs2
