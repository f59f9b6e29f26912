#include "rs2/runner.hpp"

#include <cmath>
#include <filesystem>
#include <future>
#include <limits>
#include <memory>

#include "rs2/cartpole.hpp"
#include "rs2/csv.hpp"
#include "rs2/dqn.hpp"
#include "rs2/rnd.hpp"
#include "rs2/satisficing.hpp"

namespace rs2 {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::vector<int> q_net_dims(const RunConfig& cfg, int obs_dim, int actions) {
  std::vector<int> dims;
  dims.push_back(obs_dim);
  dims.insert(dims.end(), cfg.q_hidden.begin(), cfg.q_hidden.end());
  dims.push_back(actions);
  return dims;
}

std::vector<int> rnd_net_dims(const RunConfig& cfg, int obs_dim) {
  std::vector<int> dims;
  dims.push_back(obs_dim);
  for (int l = 0; l < cfg.rnd_hidden_layers; ++l) dims.push_back(cfg.rnd_hidden);
  dims.push_back(cfg.rnd_output);
  return dims;
}

}  // namespace

std::uint64_t run_seed(std::uint64_t master_seed, SeedStream stream) {
  return derive_seed(master_seed, static_cast<std::uint64_t>(stream));
}

RunResult run_one(const RunConfig& cfg, std::uint64_t seed) {
  Rng env_rng(run_seed(seed, SeedStream::Environment));
  Rng policy_init_rng(run_seed(seed, SeedStream::PolicyInit));
  Rng policy_rng(run_seed(seed, SeedStream::PolicySampling));
  Rng replay_rng(run_seed(seed, SeedStream::ReplaySampling));
  Rng eval_rng(run_seed(seed, SeedStream::Evaluation));

  std::unique_ptr<Env> env;
  std::unique_ptr<Env> eval_env;
  PyramidEnv* pyramid = nullptr;
  std::vector<int> goal;
  if (cfg.task == Task::CartPole) {
    env = std::make_unique<CartPoleEnv>();
    eval_env = std::make_unique<CartPoleEnv>();
  } else {
    auto encoding = std::make_shared<const PyramidEncoding>(
        cfg.pyramid_depth, cfg.pyramid_dims, cfg.pyramid_obs_dim,
        run_seed(seed, SeedStream::PyramidEncoding));
    goal = pyramid_goal(cfg.goal, cfg.pyramid_depth, cfg.pyramid_dims);
    auto behaviour = std::make_unique<PyramidEnv>(encoding, goal);
    pyramid = behaviour.get();
    env = std::move(behaviour);
    eval_env = std::make_unique<PyramidEnv>(encoding, goal);
  }

  const int obs_dim = env->observation_dim();
  const int actions = env->action_count();

  DqnConfig dqn_cfg;
  dqn_cfg.discount = cfg.discount;
  dqn_cfg.lr = cfg.lr;
  dqn_cfg.batch_size = cfg.batch_size;
  dqn_cfg.target_sync_interval = cfg.target_sync_interval;
  dqn_cfg.intrinsic_coef = cfg.intrinsic_coef;
  DqnLearner learner(mlp_init(q_net_dims(cfg, obs_dim, actions), run_seed(seed, SeedStream::QNet)),
                     dqn_cfg);

  std::optional<RndModule> rnd;
  if (cfg.uses_rnd()) {
    rnd.emplace(rnd_net_dims(cfg, obs_dim), run_seed(seed, SeedStream::RndTarget),
                run_seed(seed, SeedStream::RndPredictor), cfg.lr);
  }

  std::unique_ptr<BehaviorPolicy> policy;
  if (cfg.uses_rs2()) {
    Rs2Policy::Params params;
    params.reliability.centroids_per_action = cfg.centroids_per_action;
    params.reliability.forgetting = cfg.forgetting;
    params.reliability.eps_div = cfg.eps_div;
    params.temperature = cfg.temperature;
    params.eps_div = cfg.eps_div;
    params.decay_per_episode = cfg.reliability_decay_per_episode;
    policy = std::make_unique<Rs2Policy>(actions, cfg.q_hidden.back(), cfg.aleph_g,
                                         cfg.vg_window, params, policy_init_rng);
  } else {
    EpsilonSchedule schedule = cfg.epsilon;
    schedule.total_episodes = cfg.episodes;
    policy = std::make_unique<EpsilonGreedyPolicy>(schedule);
  }

  ReplayBuffer buffer(cfg.replay_capacity);

  RunResult result;
  result.seed = seed;
  result.episodes.reserve(cfg.episodes);
  long long step_count = 0;

  for (int episode = 0; episode < cfg.episodes; ++episode) {
    policy->begin_episode(episode);
    const double beta = policy->beta().value_or(kNaN);

    std::vector<double> obs = env->reset(env_rng);
    double behaviour_return = 0.0;
    while (!env->done()) {
      const ForwardTrace trace = mlp_forward(learner.online(), obs);
      const int action = policy->behave(trace, policy_rng);
      StepResult sr = env->step(action);
      behaviour_return += sr.reward;

      Transition t;
      t.observation = std::move(obs);
      t.action = action;
      t.reward_ext = sr.reward;
      t.reward_int = rnd ? rnd->intrinsic(sr.observation) : 0.0;
      t.next_observation = sr.observation;
      t.done = sr.done;
      buffer.store(std::move(t));

      step_count += 1;
      if (cfg.update_every > 0 && step_count % cfg.update_every == 0 &&
          buffer.size() >= static_cast<std::size_t>(cfg.batch_size)) {
        const auto batch = buffer.sample(cfg.batch_size, replay_rng);
        learner.update_on(batch);
        if (rnd) rnd->train_on(batch);
      }
      if (step_count % cfg.target_sync_interval == 0) {
        learner.sync_target();
      }
      obs = std::move(sr.observation);
    }
    policy->record_episode_return(behaviour_return);

    EpisodeMetrics m;
    m.episode = episode;
    m.behavior_return = behaviour_return;
    m.beta = beta;
    m.eval_return = kNaN;
    if (pyramid) {
      const TerminalGroup group =
          classify_terminal(goal, pyramid->coords(), cfg.neighbor_radius);
      m.visits[static_cast<int>(group)] = 1;
    }
    if ((episode + 1) % cfg.eval_interval == 0) {
      double total = 0.0;
      for (int i = 0; i < cfg.eval_episodes; ++i) {
        total += greedy_episode_return(learner, *eval_env, eval_rng);
      }
      m.eval_return = total / cfg.eval_episodes;
    }
    result.episodes.push_back(m);
  }
  return result;
}

std::vector<RunResult> run_all(const RunConfig& cfg) {
  std::vector<RunResult> results;
  results.reserve(cfg.seeds.size());
  if (cfg.parallel && cfg.seeds.size() > 1) {
    std::vector<std::future<RunResult>> futures;
    futures.reserve(cfg.seeds.size());
    for (std::uint64_t seed : cfg.seeds) {
      futures.push_back(std::async(std::launch::async, run_one, cfg, seed));
    }
    for (auto& f : futures) results.push_back(f.get());
  } else {
    for (std::uint64_t seed : cfg.seeds) results.push_back(run_one(cfg, seed));
  }
  return results;
}

namespace {

std::string experiment_stem(const RunConfig& cfg) {
  std::string stem = to_string(cfg.task) + "_" + to_string(cfg.method);
  if (cfg.task == Task::Pyramid) stem += "_" + to_string(cfg.goal);
  return stem;
}

}  // namespace

std::string run_csv_name(const RunConfig& cfg, std::uint64_t seed) {
  return experiment_stem(cfg) + "_seed" + std::to_string(seed) + ".csv";
}

std::string aggregate_csv_name(const RunConfig& cfg) {
  return experiment_stem(cfg) + "_aggregate.csv";
}

void write_outputs(const RunConfig& cfg, std::span<const RunResult> runs) {
  const std::filesystem::path dir(cfg.out_dir);
  std::filesystem::create_directories(dir);
  for (const RunResult& run : runs) {
    write_run_csv((dir / run_csv_name(cfg, run.seed)).string(), run.episodes);
  }
  write_aggregate_csv((dir / aggregate_csv_name(cfg)).string(), aggregate(runs));
}

}  // namespace rs2
