#pragma once

#include <span>
#include <vector>

#include "rs2/rng.hpp"

namespace rs2 {

// Bandit-style risk-sensitive satisficing values:
//   I(a) = n(a)/N * (E(a) - aleph),  N = sum_a n(a).
// Positive means "tried often and good enough", negative "unreliable or
// short of the aspiration".
std::vector<double> rs_values(std::span<const double> counts, std::span<const double> means,
                              double aleph);

// max_a q(a) >= aleph (meeting the aspiration exactly counts as satisficed).
bool satisficed(std::span<const double> q, double aleph);

// Exploitation-mode values: I(a) = rho(a) * (q(a) - aleph).
std::vector<double> rs2_values(std::span<const double> q, std::span<const double> rho,
                               double aleph);

// Exploration-mode values for the unsatisficed case (all q < aleph).
// delta(a) = aleph - q(a) must be positive; rho_hat redistributes mass
// towards the *least* explored shortfalls, and b rescales it so the chosen
// direction can beat the current reliability:
//   rho_hat(a) = z / delta(a),  z = 1 / sum_a 1/delta(a),
//   b = max_a rho(a) / (rho_hat(a) + eps),
//   I(a) = b * rho_hat(a) - rho(a).
std::vector<double> srs_values(std::span<const double> q, std::span<const double> rho,
                               double aleph, double eps_div = 1e-12);

// Samples from softmax(scores / temperature).
int select_action(std::span<const double> scores, Rng& rng, double temperature = 1.0);

}  // namespace rs2
