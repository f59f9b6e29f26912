#include "rs2/metrics.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace rs2 {

TerminalGroup classify_terminal(std::span<const int> goal, std::span<const int> terminal,
                                int neighbor_radius) {
  if (goal.size() != terminal.size() || goal.empty()) {
    throw std::invalid_argument("classify_terminal: coordinate size mismatch");
  }
  int chebyshev = 0;
  for (std::size_t i = 0; i < goal.size(); ++i) {
    chebyshev = std::max(chebyshev, std::abs(goal[i] - terminal[i]));
  }
  if (chebyshev == 0) return TerminalGroup::Reward;
  if (chebyshev <= neighbor_radius) return TerminalGroup::Neighboring;
  return TerminalGroup::Distant;
}

VisitationLog bin_visitation(std::span<const EpisodeMetrics> episodes, int bin_size) {
  if (bin_size <= 0) {
    throw std::invalid_argument("bin_visitation: bin size must be positive");
  }
  VisitationLog log;
  log.bin_size = bin_size;
  log.bins.resize((episodes.size() + bin_size - 1) / bin_size, {0, 0, 0});
  for (std::size_t i = 0; i < episodes.size(); ++i) {
    auto& bin = log.bins[i / bin_size];
    for (int g = 0; g < 3; ++g) bin[g] += episodes[i].visits[g];
  }
  return log;
}

namespace {

double metric_column(const EpisodeMetrics& m, int col) {
  switch (col) {
    case 0: return m.behavior_return;
    case 1: return m.eval_return;
    case 2: return m.beta;
    default: return static_cast<double>(m.visits[col - 3]);
  }
}

}  // namespace

AggregateCurves aggregate(std::span<const RunResult> runs) {
  if (runs.empty()) {
    throw std::invalid_argument("aggregate: need at least one run");
  }
  const std::size_t len = runs.front().episodes.size();
  for (const RunResult& r : runs) {
    if (r.episodes.size() != len) {
      throw std::invalid_argument("aggregate: runs have misaligned episode axes");
    }
  }
  AggregateCurves out;
  out.episode.resize(len);
  for (auto& v : out.mean) v.assign(len, 0.0);
  for (auto& v : out.std_dev) v.assign(len, 0.0);
  const double n = static_cast<double>(runs.size());
  for (std::size_t i = 0; i < len; ++i) {
    out.episode[i] = runs.front().episodes[i].episode;
    for (int col = 0; col < AggregateCurves::kColumns; ++col) {
      double sum = 0.0;
      for (const RunResult& r : runs) sum += metric_column(r.episodes[i], col);
      const double mean = sum / n;
      double var = 0.0;
      for (const RunResult& r : runs) {
        const double d = metric_column(r.episodes[i], col) - mean;
        var += d * d;
      }
      out.mean[col][i] = mean;
      out.std_dev[col][i] = std::sqrt(var / n);
    }
  }
  return out;
}

}  // namespace rs2
