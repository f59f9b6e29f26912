#include "rs2/satisficing.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "rs2/mat.hpp"

namespace rs2 {

namespace {

void check_paired(std::span<const double> a, std::span<const double> b, const char* what) {
  if (a.empty() || a.size() != b.size()) {
    throw std::invalid_argument(std::string(what) + ": need matching non-empty inputs");
  }
}

}  // namespace

std::vector<double> rs_values(std::span<const double> counts, std::span<const double> means,
                              double aleph) {
  check_paired(counts, means, "rs_values");
  double total = 0.0;
  for (double n : counts) total += n;
  if (!(total > 0.0)) {
    throw std::invalid_argument("rs_values: total count must be positive");
  }
  std::vector<double> out(counts.size());
  for (std::size_t a = 0; a < counts.size(); ++a) {
    out[a] = counts[a] / total * (means[a] - aleph);
  }
  return out;
}

bool satisficed(std::span<const double> q, double aleph) {
  if (q.empty()) {
    throw std::invalid_argument("satisficed: empty action values");
  }
  return *std::max_element(q.begin(), q.end()) >= aleph;
}

std::vector<double> rs2_values(std::span<const double> q, std::span<const double> rho,
                               double aleph) {
  check_paired(q, rho, "rs2_values");
  std::vector<double> out(q.size());
  for (std::size_t a = 0; a < q.size(); ++a) {
    out[a] = rho[a] * (q[a] - aleph);
  }
  return out;
}

std::vector<double> srs_values(std::span<const double> q, std::span<const double> rho,
                               double aleph, double eps_div) {
  check_paired(q, rho, "srs_values");
  std::vector<double> delta(q.size());
  double inv_sum = 0.0;
  for (std::size_t a = 0; a < q.size(); ++a) {
    delta[a] = aleph - q[a];
    if (!(delta[a] > 0.0)) {
      throw std::logic_error("srs_values: requires every q below the aspiration");
    }
    inv_sum += 1.0 / delta[a];
  }
  const double z = 1.0 / inv_sum;
  std::vector<double> rho_hat(q.size());
  double b = 0.0;
  for (std::size_t a = 0; a < q.size(); ++a) {
    rho_hat[a] = z / delta[a];
    b = std::max(b, rho[a] / (rho_hat[a] + eps_div));
  }
  std::vector<double> out(q.size());
  for (std::size_t a = 0; a < q.size(); ++a) {
    out[a] = b * rho_hat[a] - rho[a];
  }
  return out;
}

int select_action(std::span<const double> scores, Rng& rng, double temperature) {
  if (scores.empty()) {
    throw std::invalid_argument("select_action: empty scores");
  }
  if (!(temperature > 0.0)) {
    throw std::invalid_argument("select_action: temperature must be positive");
  }
  std::vector<double> logits(scores.size());
  for (std::size_t i = 0; i < scores.size(); ++i) logits[i] = scores[i] / temperature;
  const std::vector<double> p = softmax(logits);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double u = unit(rng);
  double cum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    cum += p[i];
    if (u < cum) return static_cast<int>(i);
  }
  return static_cast<int>(p.size()) - 1;
}

}  // namespace rs2
