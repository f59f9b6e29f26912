#pragma once

#include <memory>
#include <span>
#include <vector>

#include "rs2/env.hpp"

namespace rs2 {

enum class GoalPlacement { Easy, Hard };

// Goal coordinates for a placement: Easy sits at the centre of the terminal
// layer (the most likely endpoint of a random walk), Hard near a corner.
std::vector<int> pyramid_goal(GoalPlacement placement, int depth, int dims);

long long binomial(int n, int k);

// Mixed-radix index of a coordinate vector within one depth layer
// (coords[i] in [0, level], least significant first).
int pyramid_coord_index(std::span<const int> coords, int level);

// Number of distinct trajectories of a full episode: 2^(dims) initial states
// times 2^(dims) actions for each of the (depth-1) steps.
long long pyramid_trajectory_count(int depth, int dims);

// How many trajectories end at each terminal coordinate, by brute-force
// enumeration of every initial state and action sequence. Indexed by
// pyramid_coord_index(coords, depth).
std::vector<long long> pyramid_terminal_counts(int depth, int dims);

// Closed form for the probability that a uniformly random policy terminates
// at `coords`: prod_i C(depth, coords[i]) / 2^(depth*dims).
double pyramid_reach_probability(std::span<const int> coords, int depth, int dims);

// True iff the goal can be reached from every initial state (each coordinate
// needs headroom for the forced +0/+1 increments).
bool pyramid_reachable_from_all_starts(std::span<const int> coords, int depth);

// Fixed random observation vectors for every reachable state, drawn once per
// simulation seed and shared by the behaviour and evaluation environments.
class PyramidEncoding {
 public:
  PyramidEncoding(int depth, int dims, int obs_dim, std::uint64_t seed);

  std::span<const double> observe(int level, std::span<const int> coords) const;
  int depth() const { return depth_; }
  int dims() const { return dims_; }
  int obs_dim() const { return obs_dim_; }

 private:
  int depth_;
  int dims_;
  int obs_dim_;
  std::vector<std::size_t> level_offsets_;
  std::vector<double> table_;
};

// Sparse-reward layered task: an episode starts on layer 1 with each
// coordinate 0 or 1 uniformly, every action increments each coordinate by
// its corresponding bit, and the episode ends on the terminal layer with
// reward 1 exactly when the goal coordinates are hit.
class PyramidEnv final : public Env {
 public:
  PyramidEnv(std::shared_ptr<const PyramidEncoding> encoding, std::vector<int> goal);

  int action_count() const override { return 1 << encoding_->dims(); }
  int observation_dim() const override { return encoding_->obs_dim(); }
  std::vector<double> reset(Rng& rng) override;
  StepResult step(int action) override;
  bool done() const override { return done_; }

  int level() const { return level_; }
  const std::vector<int>& coords() const { return coords_; }
  const std::vector<int>& goal() const { return goal_; }
  const PyramidEncoding& encoding() const { return *encoding_; }

 private:
  std::shared_ptr<const PyramidEncoding> encoding_;
  std::vector<int> goal_;
  std::vector<int> coords_;
  int level_ = 0;
  bool done_ = true;
};

}  // namespace rs2
