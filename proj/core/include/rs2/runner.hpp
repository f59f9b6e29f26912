#pragma once

#include <string>

#include "rs2/config.hpp"
#include "rs2/metrics.hpp"

namespace rs2 {

// Identifiers of the independent random streams a run derives from its seed.
// Appending streams keeps existing ones reproducible.
enum class SeedStream : std::uint64_t {
  QNet = 0,
  PyramidEncoding = 1,
  Environment = 2,
  PolicyInit = 3,
  PolicySampling = 4,
  ReplaySampling = 5,
  Evaluation = 6,
  RndTarget = 7,
  RndPredictor = 8,
};

std::uint64_t run_seed(std::uint64_t master_seed, SeedStream stream);

// Trains one agent for config.episodes episodes and returns the per-episode
// metrics. Fully deterministic in (config, seed).
RunResult run_one(const RunConfig& config, std::uint64_t seed);

// All configured seeds, sequentially or (opt-in) one thread per seed.
std::vector<RunResult> run_all(const RunConfig& config);

// File names inside config.out_dir ("<task>_<method>[_<goal>]_...").
std::string run_csv_name(const RunConfig& config, std::uint64_t seed);
std::string aggregate_csv_name(const RunConfig& config);

// Writes one CSV per run plus the aggregate file; creates out_dir if needed.
void write_outputs(const RunConfig& config, std::span<const RunResult> runs);

}  // namespace rs2
