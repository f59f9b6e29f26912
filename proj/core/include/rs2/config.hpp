#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "rs2/policy.hpp"
#include "rs2/pyramid.hpp"

namespace rs2 {

enum class Task { CartPole, Pyramid };
enum class Method { Dqn, DqnRnd, Rs2, Rs2Rnd };

std::string to_string(Task t);
std::string to_string(Method m);
std::string to_string(GoalPlacement g);

struct RunConfig {
  Task task = Task::CartPole;
  Method method = Method::Dqn;
  int episodes = 0;
  std::vector<std::uint64_t> seeds;
  std::string out_dir = ".";

  double aleph_g = 0.0;
  int vg_window = 100;

  EpsilonSchedule epsilon;

  std::vector<int> q_hidden;
  double discount = 0.0;
  double lr = 1e-3;
  int batch_size = 64;
  int replay_capacity = 0;
  int target_sync_interval = 200;
  int update_every = 1;  // gradient steps per this many env steps; 0 disables learning

  int centroids_per_action = 3;
  double forgetting = 0.9;
  double eps_div = 1e-12;
  double temperature = 1.0;
  bool reliability_decay_per_episode = false;

  int rnd_hidden = 512;
  int rnd_hidden_layers = 0;
  int rnd_output = 16;
  double intrinsic_coef = 1.0;

  int pyramid_depth = 6;
  int pyramid_dims = 2;
  int pyramid_obs_dim = 32;
  GoalPlacement goal = GoalPlacement::Easy;

  int eval_interval = 0;
  int eval_episodes = 1;
  int neighbor_radius = 2;
  int visitation_bin = 1000;

  bool parallel = false;

  bool uses_rnd() const { return method == Method::DqnRnd || method == Method::Rs2Rnd; }
  bool uses_rs2() const { return method == Method::Rs2 || method == Method::Rs2Rnd; }
};

// Flat key=value entries ('#' comments and blank lines allowed in files).
std::map<std::string, std::string> read_config_file(const std::string& path);

// Validates entries and fills in task-dependent defaults. Unknown keys,
// malformed values, and invalid combinations all throw with a diagnostic.
RunConfig parse_config(const std::map<std::string, std::string>& entries);

}  // namespace rs2
