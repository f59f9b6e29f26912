#include "rs2/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <stdexcept>

namespace rs2 {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

[[noreturn]] void bad_value(const std::string& key, const std::string& value) {
  throw std::invalid_argument("config: bad value '" + value + "' for key '" + key + "'");
}

long long to_int(const std::string& key, const std::string& value) {
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (ec != std::errc{} || ptr != value.data() + value.size()) bad_value(key, value);
  return v;
}

std::uint64_t to_uint(const std::string& key, const std::string& value) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (ec != std::errc{} || ptr != value.data() + value.size()) bad_value(key, value);
  return v;
}

double to_double(const std::string& key, const std::string& value) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (ec != std::errc{} || ptr != value.data() + value.size()) bad_value(key, value);
  return v;
}

bool to_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1") return true;
  if (value == "false" || value == "0") return false;
  bad_value(key, value);
}

const std::set<std::string>& known_keys() {
  static const std::set<std::string> keys = {
      "task", "method", "episodes", "seeds", "out_dir",
      "aleph_g", "vg_window",
      "eps_start", "eps_end", "eps_schedule",
      "q_hidden", "discount", "lr", "batch_size", "replay_capacity",
      "target_sync", "update_every",
      "k_centroids", "forgetting", "eps_div", "temperature", "reliability_decay",
      "rnd_hidden", "rnd_hidden_layers", "rnd_output", "intrinsic_coef",
      "pyramid_depth", "pyramid_dims", "pyramid_obs_dim", "goal",
      "eval_interval", "eval_episodes", "neighbor_radius", "visitation_bin",
      "parallel",
  };
  return keys;
}

}  // namespace

std::string to_string(Task t) {
  return t == Task::CartPole ? "cartpole" : "pyramid";
}

std::string to_string(Method m) {
  switch (m) {
    case Method::Dqn: return "dqn";
    case Method::DqnRnd: return "dqn-rnd";
    case Method::Rs2: return "rs2";
    case Method::Rs2Rnd: return "rs2-rnd";
  }
  throw std::logic_error("to_string: bad method");
}

std::string to_string(GoalPlacement g) {
  return g == GoalPlacement::Easy ? "easy" : "hard";
}

std::map<std::string, std::string> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("config: cannot open '" + path + "'");
  }
  std::map<std::string, std::string> entries;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    lineno += 1;
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config: line " + std::to_string(lineno) + " of '" + path +
                                  "' is not key=value");
    }
    const std::string key = trim(stripped.substr(0, eq));
    if (key.empty()) {
      throw std::invalid_argument("config: empty key on line " + std::to_string(lineno));
    }
    if (!entries.emplace(key, trim(stripped.substr(eq + 1))).second) {
      throw std::invalid_argument("config: duplicate key '" + key + "'");
    }
  }
  return entries;
}

RunConfig parse_config(const std::map<std::string, std::string>& entries) {
  for (const auto& [key, value] : entries) {
    if (!known_keys().count(key)) {
      throw std::invalid_argument("config: unknown key '" + key + "'");
    }
  }
  const auto get = [&](const char* key) -> const std::string* {
    const auto it = entries.find(key);
    return it == entries.end() ? nullptr : &it->second;
  };

  RunConfig cfg;

  const std::string* task = get("task");
  if (!task) {
    throw std::invalid_argument("config: missing required key 'task'");
  }
  if (*task == "cartpole") {
    cfg.task = Task::CartPole;
  } else if (*task == "pyramid") {
    cfg.task = Task::Pyramid;
  } else {
    bad_value("task", *task);
  }
  const bool cartpole = cfg.task == Task::CartPole;

  if (const auto* v = get("method")) {
    if (*v == "dqn") cfg.method = Method::Dqn;
    else if (*v == "dqn-rnd") cfg.method = Method::DqnRnd;
    else if (*v == "rs2") cfg.method = Method::Rs2;
    else if (*v == "rs2-rnd") cfg.method = Method::Rs2Rnd;
    else bad_value("method", *v);
  }

  cfg.episodes = cartpole ? 600 : 30000;
  if (const auto* v = get("episodes")) cfg.episodes = static_cast<int>(to_int("episodes", *v));
  if (cfg.episodes <= 0) {
    throw std::invalid_argument("config: episodes must be positive");
  }

  cfg.seeds = {0};
  if (const auto* v = get("seeds")) {
    cfg.seeds.clear();
    for (const std::string& s : split(*v, ',')) {
      if (s.empty()) bad_value("seeds", *v);
      cfg.seeds.push_back(to_uint("seeds", s));
    }
  }
  if (cfg.seeds.empty()) {
    throw std::invalid_argument("config: seeds must be non-empty");
  }

  if (const auto* v = get("out_dir")) cfg.out_dir = *v;

  cfg.aleph_g = cartpole ? 195.0 : 1.0;
  if (const auto* v = get("aleph_g")) cfg.aleph_g = to_double("aleph_g", *v);
  if (!(cfg.aleph_g > 0.0)) {
    throw std::invalid_argument("config: aleph_g must be positive");
  }

  if (const auto* v = get("vg_window")) cfg.vg_window = static_cast<int>(to_int("vg_window", *v));
  if (cfg.vg_window <= 0) {
    throw std::invalid_argument("config: vg_window must be positive");
  }

  cfg.epsilon.mode = cartpole ? EpsilonSchedule::Mode::ExponentialDecay : EpsilonSchedule::Mode::Constant;
  cfg.epsilon.start = cartpole ? 1.0 : 0.1;
  cfg.epsilon.end = cartpole ? 0.01 : 0.1;
  if (const auto* v = get("eps_schedule")) {
    if (*v == "exp") cfg.epsilon.mode = EpsilonSchedule::Mode::ExponentialDecay;
    else if (*v == "const") cfg.epsilon.mode = EpsilonSchedule::Mode::Constant;
    else bad_value("eps_schedule", *v);
  }
  if (const auto* v = get("eps_start")) cfg.epsilon.start = to_double("eps_start", *v);
  if (const auto* v = get("eps_end")) cfg.epsilon.end = to_double("eps_end", *v);
  cfg.epsilon.total_episodes = cfg.episodes;
  if (cfg.epsilon.start < 0.0 || cfg.epsilon.start > 1.0 || cfg.epsilon.end < 0.0 ||
      cfg.epsilon.end > 1.0) {
    throw std::invalid_argument("config: epsilon endpoints must lie in [0, 1]");
  }
  if (cfg.epsilon.mode == EpsilonSchedule::Mode::ExponentialDecay &&
      (!(cfg.epsilon.start > 0.0) || !(cfg.epsilon.end > 0.0))) {
    throw std::invalid_argument("config: exponential epsilon decay needs positive endpoints");
  }

  cfg.q_hidden = cartpole ? std::vector<int>{128, 128} : std::vector<int>{512};
  if (const auto* v = get("q_hidden")) {
    cfg.q_hidden.clear();
    for (const std::string& s : split(*v, ',')) {
      const int width = static_cast<int>(to_int("q_hidden", s));
      if (width <= 0) bad_value("q_hidden", *v);
      cfg.q_hidden.push_back(width);
    }
  }
  if (cfg.q_hidden.empty()) {
    throw std::invalid_argument("config: q_hidden must name at least one hidden layer");
  }

  // Aspiration methods compare max Q against a raw-return target, so their Q
  // must be undiscounted and its magnitude must propagate within the budget.
  cfg.discount = cartpole && !cfg.uses_rs2() ? 0.99 : 1.0;
  if (const auto* v = get("discount")) cfg.discount = to_double("discount", *v);
  if (cfg.discount < 0.0 || cfg.discount > 1.0) {
    throw std::invalid_argument("config: discount must lie in [0, 1]");
  }

  if (const auto* v = get("lr")) cfg.lr = to_double("lr", *v);
  if (!(cfg.lr > 0.0)) {
    throw std::invalid_argument("config: lr must be positive");
  }

  if (const auto* v = get("batch_size")) cfg.batch_size = static_cast<int>(to_int("batch_size", *v));
  if (cfg.batch_size <= 0) {
    throw std::invalid_argument("config: batch_size must be positive");
  }

  cfg.replay_capacity = cartpole ? 10000 : 100000;
  if (const auto* v = get("replay_capacity")) {
    cfg.replay_capacity = static_cast<int>(to_int("replay_capacity", *v));
  }
  if (cfg.replay_capacity <= 0) {
    throw std::invalid_argument("config: replay_capacity must be positive");
  }

  if (cartpole && cfg.uses_rs2()) cfg.target_sync_interval = 50;
  if (const auto* v = get("target_sync")) {
    cfg.target_sync_interval = static_cast<int>(to_int("target_sync", *v));
  }
  if (cfg.target_sync_interval <= 0) {
    throw std::invalid_argument("config: target_sync must be positive");
  }

  // Pyramid episodes are exactly five steps; one gradient update per episode.
  cfg.update_every = cartpole ? 1 : 5;
  if (const auto* v = get("update_every")) cfg.update_every = static_cast<int>(to_int("update_every", *v));
  if (cfg.update_every < 0) {
    throw std::invalid_argument("config: update_every must be >= 0");
  }

  if (const auto* v = get("k_centroids")) cfg.centroids_per_action = static_cast<int>(to_int("k_centroids", *v));
  if (cfg.centroids_per_action <= 0) {
    throw std::invalid_argument("config: k_centroids must be positive");
  }

  if (const auto* v = get("forgetting")) cfg.forgetting = to_double("forgetting", *v);
  if (!(cfg.forgetting > 0.0) || cfg.forgetting >= 1.0) {
    throw std::invalid_argument("config: forgetting must lie in (0, 1)");
  }

  if (const auto* v = get("eps_div")) cfg.eps_div = to_double("eps_div", *v);
  if (!(cfg.eps_div > 0.0)) {
    throw std::invalid_argument("config: eps_div must be positive");
  }

  // Boltzmann temperature tracks the task's return scale (CartPole scores span
  // ~200 units, Pyramid scores span ~1).
  cfg.temperature = cartpole ? 1.0 : 0.05;
  if (const auto* v = get("temperature")) cfg.temperature = to_double("temperature", *v);
  if (!(cfg.temperature > 0.0)) {
    throw std::invalid_argument("config: temperature must be positive");
  }

  if (const auto* v = get("reliability_decay")) {
    if (*v == "selection") cfg.reliability_decay_per_episode = false;
    else if (*v == "episode") cfg.reliability_decay_per_episode = true;
    else bad_value("reliability_decay", *v);
  }

  if (const auto* v = get("rnd_hidden")) cfg.rnd_hidden = static_cast<int>(to_int("rnd_hidden", *v));
  cfg.rnd_hidden_layers = cartpole ? 2 : 1;
  if (const auto* v = get("rnd_hidden_layers")) {
    cfg.rnd_hidden_layers = static_cast<int>(to_int("rnd_hidden_layers", *v));
  }
  if (const auto* v = get("rnd_output")) cfg.rnd_output = static_cast<int>(to_int("rnd_output", *v));
  if (cfg.rnd_hidden <= 0 || cfg.rnd_hidden_layers <= 0 || cfg.rnd_output <= 0) {
    throw std::invalid_argument("config: RND net dimensions must be positive");
  }
  if (const auto* v = get("intrinsic_coef")) cfg.intrinsic_coef = to_double("intrinsic_coef", *v);

  if (const auto* v = get("pyramid_depth")) cfg.pyramid_depth = static_cast<int>(to_int("pyramid_depth", *v));
  if (const auto* v = get("pyramid_dims")) cfg.pyramid_dims = static_cast<int>(to_int("pyramid_dims", *v));
  if (const auto* v = get("pyramid_obs_dim")) cfg.pyramid_obs_dim = static_cast<int>(to_int("pyramid_obs_dim", *v));
  if (cfg.pyramid_depth < 2 || cfg.pyramid_dims < 1 || cfg.pyramid_obs_dim < 1) {
    throw std::invalid_argument("config: pyramid geometry out of range");
  }

  if (const auto* v = get("goal")) {
    if (cartpole) {
      throw std::invalid_argument("config: goal placement only applies to the pyramid task");
    }
    if (*v == "easy") cfg.goal = GoalPlacement::Easy;
    else if (*v == "hard") cfg.goal = GoalPlacement::Hard;
    else bad_value("goal", *v);
  }

  cfg.eval_interval = cartpole ? 10 : 100;
  if (const auto* v = get("eval_interval")) cfg.eval_interval = static_cast<int>(to_int("eval_interval", *v));
  if (cfg.eval_interval <= 0) {
    throw std::invalid_argument("config: eval_interval must be positive");
  }

  if (const auto* v = get("eval_episodes")) cfg.eval_episodes = static_cast<int>(to_int("eval_episodes", *v));
  if (cfg.eval_episodes <= 0) {
    throw std::invalid_argument("config: eval_episodes must be positive");
  }

  if (const auto* v = get("neighbor_radius")) cfg.neighbor_radius = static_cast<int>(to_int("neighbor_radius", *v));
  if (cfg.neighbor_radius < 0) {
    throw std::invalid_argument("config: neighbor_radius must be >= 0");
  }

  if (const auto* v = get("visitation_bin")) cfg.visitation_bin = static_cast<int>(to_int("visitation_bin", *v));
  if (cfg.visitation_bin <= 0) {
    throw std::invalid_argument("config: visitation_bin must be positive");
  }

  if (const auto* v = get("parallel")) cfg.parallel = to_bool("parallel", *v);

  return cfg;
}

}  // namespace rs2
