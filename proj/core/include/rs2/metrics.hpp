#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace rs2 {

enum class TerminalGroup { Reward = 0, Neighboring = 1, Distant = 2 };

// Groups a terminal state by Chebyshev distance from the goal: 0 is the
// reward state itself, anything within the radius is neighboring, the rest
// is distant.
TerminalGroup classify_terminal(std::span<const int> goal, std::span<const int> terminal,
                                int neighbor_radius = 2);

struct EpisodeMetrics {
  int episode = 0;
  double behavior_return = 0.0;
  // NaN on episodes where no greedy evaluation was sampled.
  double eval_return = 0.0;
  // NaN for policies without an aspiration mechanism.
  double beta = 0.0;
  // One-hot terminal-group indicator (all zero for tasks without one).
  std::array<int, 3> visits{0, 0, 0};
};

struct RunResult {
  std::uint64_t seed = 0;
  std::vector<EpisodeMetrics> episodes;
};

// Per-bin terminal-group counts (Fig.-style visitation curves). The last bin
// may be shorter; counts in each bin sum to the episodes it covers.
struct VisitationLog {
  int bin_size = 0;
  std::vector<std::array<long long, 3>> bins;
};

VisitationLog bin_visitation(std::span<const EpisodeMetrics> episodes, int bin_size);

// Pointwise mean and population standard deviation over runs, one curve per
// CSV value column. NaN entries (unsampled evals, missing beta) stay NaN.
struct AggregateCurves {
  static constexpr int kColumns = 6;  // behavior, eval, beta, visits x3
  std::vector<int> episode;
  std::array<std::vector<double>, kColumns> mean;
  std::array<std::vector<double>, kColumns> std_dev;
};

AggregateCurves aggregate(std::span<const RunResult> runs);

}  // namespace rs2
