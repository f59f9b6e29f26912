#include "rs2/reliability.hpp"

#include <cmath>
#include <stdexcept>

namespace rs2 {

ReliabilityEstimator::ReliabilityEstimator(int action_count, int latent_dim, Params params, Rng& init_rng)
    : latent_dim_(latent_dim), params_(params), counts_(action_count, 0.0) {
  if (action_count < 1 || latent_dim < 1) {
    throw std::invalid_argument("ReliabilityEstimator: need positive action count and latent dim");
  }
  if (params_.centroids_per_action < 1) {
    throw std::invalid_argument("ReliabilityEstimator: need at least one centroid per action");
  }
  if (!(params_.forgetting > 0.0) || params_.forgetting >= 1.0) {
    throw std::invalid_argument("ReliabilityEstimator: forgetting must lie in (0, 1)");
  }
  std::normal_distribution<double> dist(0.0, 1.0);
  centroids_.reserve(action_count);
  for (int a = 0; a < action_count; ++a) {
    Mat c(params_.centroids_per_action, latent_dim);
    for (int k = 0; k < params_.centroids_per_action; ++k) {
      auto row = c.row(k);
      double norm_sq = 0.0;
      for (double& v : row) {
        v = dist(init_rng);
        norm_sq += v * v;
      }
      if (norm_sq == 0.0) {
        row[0] = 1.0;
        norm_sq = 1.0;
      }
      const double inv_norm = 1.0 / std::sqrt(norm_sq);
      for (double& v : row) v *= inv_norm;
    }
    centroids_.push_back(std::move(c));
  }
  // Unit starting mass so the random initial centroids keep some say in the
  // first weighted averages instead of snapping onto the first latent seen.
  masses_.resize(action_count, params_.centroids_per_action);
  masses_.fill(1.0);
}

std::vector<double> ReliabilityEstimator::reliability(std::span<const double> z) const {
  if (static_cast<int>(z.size()) != latent_dim_) {
    throw std::invalid_argument("ReliabilityEstimator::reliability: latent size mismatch");
  }
  const int k_count = params_.centroids_per_action;
  std::vector<double> weighted(counts_.size());
  for (std::size_t a = 0; a < counts_.size(); ++a) {
    double inv_dist_sum = 0.0;
    for (int k = 0; k < k_count; ++k) {
      const double d = std::sqrt(squared_distance(z, centroids_[a].row(k)));
      inv_dist_sum += 1.0 / (d + params_.eps_div);
    }
    weighted[a] = counts_[a] / k_count * inv_dist_sum;
  }
  return softmax(weighted);
}

void ReliabilityEstimator::update(std::span<const double> z, int action, bool decay_now) {
  if (static_cast<int>(z.size()) != latent_dim_) {
    throw std::invalid_argument("ReliabilityEstimator::update: latent size mismatch");
  }
  if (action < 0 || action >= action_count()) {
    throw std::invalid_argument("ReliabilityEstimator::update: action out of range");
  }
  counts_[action] += 1.0;
  Mat& cents = centroids_[action];
  for (int k = 0; k < params_.centroids_per_action; ++k) {
    auto row = cents.row(k);
    const double d = std::sqrt(squared_distance(z, row));
    const double w = 1.0 / (d + params_.eps_div);
    const double mass = masses_(action, k);
    const double denom = mass + w;
    for (std::size_t i = 0; i < row.size(); ++i) {
      row[i] = (mass * row[i] + w * z[i]) / denom;
    }
    masses_(action, k) = denom;
  }
  if (decay_now) decay();
}

void ReliabilityEstimator::decay() {
  for (double& n : counts_) n *= params_.forgetting;
  for (double& w : masses_.data) w *= params_.forgetting;
}

std::span<const double> ReliabilityEstimator::centroid(int action, int k) const {
  return centroids_.at(action).row(k);
}

void ReliabilityEstimator::set_centroid(int action, int k, std::span<const double> c) {
  if (static_cast<int>(c.size()) != latent_dim_) {
    throw std::invalid_argument("ReliabilityEstimator::set_centroid: latent size mismatch");
  }
  auto row = centroids_.at(action).row(k);
  std::copy(c.begin(), c.end(), row.begin());
}

}  // namespace rs2
