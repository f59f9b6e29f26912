#include "rs2/pyramid.hpp"

#include <cmath>
#include <stdexcept>

namespace rs2 {

namespace {

void check_layout(int depth, int dims) {
  if (depth < 1 || dims < 1) {
    throw std::invalid_argument("pyramid: depth and dims must be positive");
  }
  if (depth * dims >= 62) {
    throw std::invalid_argument("pyramid: trajectory count overflows 64 bits");
  }
}

std::size_t layer_size(int level, int dims) {
  std::size_t n = 1;
  for (int i = 0; i < dims; ++i) n *= static_cast<std::size_t>(level + 1);
  return n;
}

}  // namespace

std::vector<int> pyramid_goal(GoalPlacement placement, int depth, int dims) {
  check_layout(depth, dims);
  std::vector<int> goal(dims);
  if (placement == GoalPlacement::Easy) {
    for (int& c : goal) c = depth / 2;
  } else {
    goal[0] = 1;
    for (int i = 1; i < dims; ++i) goal[i] = depth - 1;
  }
  return goal;
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  long long r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
  }
  return r;
}

int pyramid_coord_index(std::span<const int> coords, int level) {
  int idx = 0;
  int stride = 1;
  for (int c : coords) {
    if (c < 0 || c > level) {
      throw std::out_of_range("pyramid_coord_index: coordinate outside layer");
    }
    idx += c * stride;
    stride *= level + 1;
  }
  return idx;
}

long long pyramid_trajectory_count(int depth, int dims) {
  check_layout(depth, dims);
  return 1ll << (depth * dims);
}

std::vector<long long> pyramid_terminal_counts(int depth, int dims) {
  check_layout(depth, dims);
  const int actions = 1 << dims;
  std::vector<long long> counts(layer_size(depth, dims), 0);
  std::vector<int> coords(dims);
  // One counter enumerates the initial state bits and every step's action
  // bits at once: dims bits per stage, depth stages.
  const long long total = pyramid_trajectory_count(depth, dims);
  for (long long traj = 0; traj < total; ++traj) {
    long long bits = traj;
    for (int i = 0; i < dims; ++i) {
      coords[i] = static_cast<int>(bits & 1);
      bits >>= 1;
    }
    for (int step = 1; step < depth; ++step) {
      const int action = static_cast<int>(bits & (actions - 1));
      bits >>= dims;
      for (int i = 0; i < dims; ++i) coords[i] += (action >> i) & 1;
    }
    counts[pyramid_coord_index(coords, depth)] += 1;
  }
  return counts;
}

double pyramid_reach_probability(std::span<const int> coords, int depth, int dims) {
  check_layout(depth, dims);
  if (static_cast<int>(coords.size()) != dims) {
    throw std::invalid_argument("pyramid_reach_probability: wrong coordinate count");
  }
  long long numer = 1;
  for (int c : coords) numer *= binomial(depth, c);
  return static_cast<double>(numer) / static_cast<double>(pyramid_trajectory_count(depth, dims));
}

bool pyramid_reachable_from_all_starts(std::span<const int> coords, int depth) {
  for (int c : coords) {
    if (c < 1 || c > depth - 1) return false;
  }
  return true;
}

PyramidEncoding::PyramidEncoding(int depth, int dims, int obs_dim, std::uint64_t seed)
    : depth_(depth), dims_(dims), obs_dim_(obs_dim) {
  check_layout(depth, dims);
  if (obs_dim < 1) {
    throw std::invalid_argument("PyramidEncoding: obs_dim must be positive");
  }
  level_offsets_.assign(depth + 1, 0);
  std::size_t total = 0;
  for (int level = 1; level <= depth; ++level) {
    level_offsets_[level] = total;
    total += layer_size(level, dims);
  }
  table_.resize(total * static_cast<std::size_t>(obs_dim));
  Rng rng(seed);
  std::normal_distribution<double> dist(0.0, 1.0);
  for (double& v : table_) v = dist(rng);
}

std::span<const double> PyramidEncoding::observe(int level, std::span<const int> coords) const {
  if (level < 1 || level > depth_) {
    throw std::out_of_range("PyramidEncoding::observe: level outside pyramid");
  }
  const std::size_t state = level_offsets_[level] + pyramid_coord_index(coords, level);
  return {table_.data() + state * obs_dim_, static_cast<std::size_t>(obs_dim_)};
}

PyramidEnv::PyramidEnv(std::shared_ptr<const PyramidEncoding> encoding, std::vector<int> goal)
    : encoding_(std::move(encoding)), goal_(std::move(goal)) {
  if (!encoding_) {
    throw std::invalid_argument("PyramidEnv: null encoding");
  }
  if (static_cast<int>(goal_.size()) != encoding_->dims()) {
    throw std::invalid_argument("PyramidEnv: goal dimensionality mismatch");
  }
  for (int c : goal_) {
    if (c < 0 || c > encoding_->depth()) {
      throw std::invalid_argument("PyramidEnv: goal outside terminal layer");
    }
  }
}

std::vector<double> PyramidEnv::reset(Rng& rng) {
  std::uniform_int_distribution<int> bit(0, 1);
  coords_.assign(encoding_->dims(), 0);
  for (int& c : coords_) c = bit(rng);
  level_ = 1;
  done_ = false;
  auto obs = encoding_->observe(level_, coords_);
  return {obs.begin(), obs.end()};
}

StepResult PyramidEnv::step(int action) {
  if (done_) {
    throw std::logic_error("PyramidEnv::step: episode already finished");
  }
  if (action < 0 || action >= action_count()) {
    throw std::invalid_argument("PyramidEnv::step: action out of range");
  }
  for (int i = 0; i < encoding_->dims(); ++i) {
    coords_[i] += (action >> i) & 1;
  }
  level_ += 1;
  done_ = level_ == encoding_->depth();

  StepResult r;
  auto obs = encoding_->observe(level_, coords_);
  r.observation.assign(obs.begin(), obs.end());
  r.done = done_;
  r.reward = (done_ && coords_ == goal_) ? 1.0 : 0.0;
  return r;
}

}  // namespace rs2
