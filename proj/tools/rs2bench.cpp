#include <CLI11.hpp>

#include <cstdio>
#include <exception>
#include <iostream>
#include <map>
#include <string>

#include "rs2/config.hpp"
#include "rs2/csv.hpp"
#include "rs2/pyramid.hpp"
#include "rs2/runner.hpp"

namespace {

struct RunFlags {
  std::string config_path;
  std::string task, method, seeds, goal, out_dir;
  int episodes = -1;
  double aleph_g = 0.0;
  bool aleph_set = false;
  std::vector<std::string> overrides;
};

int do_run(const RunFlags& flags) {
  std::map<std::string, std::string> entries;
  if (!flags.config_path.empty()) {
    entries = rs2::read_config_file(flags.config_path);
  }
  const auto put = [&](const char* key, const std::string& value) {
    entries[key] = value;
  };
  if (!flags.task.empty()) put("task", flags.task);
  if (!flags.method.empty()) put("method", flags.method);
  if (flags.episodes >= 0) put("episodes", std::to_string(flags.episodes));
  if (!flags.seeds.empty()) put("seeds", flags.seeds);
  if (flags.aleph_set) put("aleph_g", rs2::format_double(flags.aleph_g));
  if (!flags.goal.empty()) put("goal", flags.goal);
  if (!flags.out_dir.empty()) put("out_dir", flags.out_dir);
  for (const std::string& kv : flags.overrides) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw std::invalid_argument("--set expects key=value, got '" + kv + "'");
    }
    entries[kv.substr(0, eq)] = kv.substr(eq + 1);
  }

  const rs2::RunConfig cfg = rs2::parse_config(entries);
  const auto runs = rs2::run_all(cfg);
  rs2::write_outputs(cfg, runs);
  for (const auto& run : runs) {
    std::cout << cfg.out_dir << '/' << rs2::run_csv_name(cfg, run.seed) << '\n';
  }
  std::cout << cfg.out_dir << '/' << rs2::aggregate_csv_name(cfg) << '\n';
  return 0;
}

int do_oracle(const std::string& task) {
  if (task != "pyramid") {
    throw std::invalid_argument("oracle: only the pyramid task has one (got '" + task + "')");
  }
  const int depth = 6;
  const int dims = 2;
  std::cout << "# probability that a uniformly random policy ends at (x, y)\n";
  std::cout << "# rows x = 0.." << depth << ", columns y = 0.." << depth << "\n";
  std::vector<int> coords(2);
  for (int x = 0; x <= depth; ++x) {
    coords[0] = x;
    for (int y = 0; y <= depth; ++y) {
      coords[1] = y;
      if (y > 0) std::cout << ' ';
      std::cout << rs2::format_double(rs2::pyramid_reach_probability(coords, depth, dims));
    }
    std::cout << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Satisficing-exploration benchmark runner"};
  app.require_subcommand(1);

  RunFlags flags;
  CLI::App* run = app.add_subcommand("run", "Train one method on one task across seeds");
  run->add_option("--task", flags.task, "cartpole | pyramid");
  run->add_option("--method", flags.method, "dqn | dqn-rnd | rs2 | rs2-rnd");
  run->add_option("--episodes", flags.episodes, "Episodes per seed");
  run->add_option("--seeds", flags.seeds, "Comma-separated seed list");
  run->add_option("--aleph-g", flags.aleph_g, "Global aspiration")->each([&](const std::string&) {
    flags.aleph_set = true;
  });
  run->add_option("--goal", flags.goal, "easy | hard (pyramid)");
  run->add_option("--out", flags.out_dir, "Output directory for CSV files");
  run->add_option("--config", flags.config_path, "key=value config file (flags win)");
  run->add_option("--set", flags.overrides, "Extra key=value overrides")->take_all();

  std::string oracle_task;
  CLI::App* oracle = app.add_subcommand("oracle", "Print the exact random-reach table");
  oracle->add_option("--task", oracle_task, "pyramid")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) return do_run(flags);
    if (oracle->parsed()) return do_oracle(oracle_task);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
