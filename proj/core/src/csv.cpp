#include "rs2/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace rs2 {

namespace {

constexpr const char* kRunHeader =
    "episode,behavior_return,eval_return,beta,visits_reward,visits_neighbor,visits_distant";

std::ofstream open_for_write(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("csv: cannot write '" + path + "'");
  }
  return out;
}

std::vector<std::string> split_row(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(',', start);
    out.push_back(line.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

double parse_double(const std::string& s, const std::string& path) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw std::runtime_error("csv: bad number '" + s + "' in '" + path + "'");
  }
  return v;
}

long long parse_int(const std::string& s, const std::string& path) {
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw std::runtime_error("csv: bad integer '" + s + "' in '" + path + "'");
  }
  return v;
}

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc{}) {
    throw std::logic_error("format_double: conversion failed");
  }
  return {buf, ptr};
}

void write_run_csv(const std::string& path, std::span<const EpisodeMetrics> episodes) {
  std::ofstream out = open_for_write(path);
  out << kRunHeader << '\n';
  for (const EpisodeMetrics& m : episodes) {
    out << m.episode << ',' << format_double(m.behavior_return) << ','
        << format_double(m.eval_return) << ',' << format_double(m.beta) << ',' << m.visits[0]
        << ',' << m.visits[1] << ',' << m.visits[2] << '\n';
  }
  if (!out) {
    throw std::runtime_error("csv: write failed for '" + path + "'");
  }
}

std::vector<EpisodeMetrics> read_run_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("csv: cannot open '" + path + "'");
  }
  std::string line;
  if (!std::getline(in, line) || line != kRunHeader) {
    throw std::runtime_error("csv: '" + path + "' has an unexpected header");
  }
  std::vector<EpisodeMetrics> out;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto cells = split_row(line);
    if (cells.size() != 7) {
      throw std::runtime_error("csv: wrong column count in '" + path + "'");
    }
    EpisodeMetrics m;
    m.episode = static_cast<int>(parse_int(cells[0], path));
    m.behavior_return = parse_double(cells[1], path);
    m.eval_return = parse_double(cells[2], path);
    m.beta = parse_double(cells[3], path);
    for (int g = 0; g < 3; ++g) {
      m.visits[g] = static_cast<int>(parse_int(cells[4 + g], path));
    }
    out.push_back(m);
  }
  return out;
}

void write_aggregate_csv(const std::string& path, const AggregateCurves& curves) {
  static constexpr const char* kValueColumns[AggregateCurves::kColumns] = {
      "behavior_return", "eval_return", "beta", "visits_reward", "visits_neighbor",
      "visits_distant"};
  std::ofstream out = open_for_write(path);
  out << "episode";
  for (const char* col : kValueColumns) {
    out << ',' << col << "_mean," << col << "_std";
  }
  out << '\n';
  for (std::size_t i = 0; i < curves.episode.size(); ++i) {
    out << curves.episode[i];
    for (int col = 0; col < AggregateCurves::kColumns; ++col) {
      out << ',' << format_double(curves.mean[col][i]) << ','
          << format_double(curves.std_dev[col][i]);
    }
    out << '\n';
  }
  if (!out) {
    throw std::runtime_error("csv: write failed for '" + path + "'");
  }
}

}  // namespace rs2
