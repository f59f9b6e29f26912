#pragma once

#include <string>

#include "rs2/metrics.hpp"

namespace rs2 {

// Shortest decimal text that parses back to exactly the same double;
// NaN is spelled "nan".
std::string format_double(double v);

// Per-run file: header plus one row per episode, columns
// episode,behavior_return,eval_return,beta,visits_reward,visits_neighbor,visits_distant
void write_run_csv(const std::string& path, std::span<const EpisodeMetrics> episodes);

std::vector<EpisodeMetrics> read_run_csv(const std::string& path);

// Aggregate file: same value columns, each split into _mean and _std.
void write_aggregate_csv(const std::string& path, const AggregateCurves& curves);

}  // namespace rs2
