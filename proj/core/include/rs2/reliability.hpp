#pragma once

#include <span>
#include <vector>

#include "rs2/mat.hpp"
#include "rs2/rng.hpp"

namespace rs2 {

// Region-weighted soft visit counts over a learned latent space. Each action
// keeps K centroids; a latent's inverse distance to them weights how much of
// the action's decayed count n(a) applies near that latent. reliability()
// turns the weighted counts into a distribution with a softmax.
class ReliabilityEstimator {
 public:
  struct Params {
    int centroids_per_action = 3;
    double forgetting = 0.9;   // decay factor applied to counts and masses
    double eps_div = 1e-12;    // guards the inverse-distance weights
  };

  ReliabilityEstimator(int action_count, int latent_dim, Params params, Rng& init_rng);

  int action_count() const { return static_cast<int>(counts_.size()); }
  int latent_dim() const { return latent_dim_; }
  const Params& params() const { return params_; }

  // rho(a) = softmax_a( n(a)/K * sum_k 1/(||z - c(a,k)|| + eps) )
  std::vector<double> reliability(std::span<const double> z) const;

  // Count increment for the chosen action, then a mass-weighted average pull
  // of its centroids towards z, then (optionally) the global decay.
  void update(std::span<const double> z, int action, bool decay_now = true);

  // n *= gamma and W *= gamma for every action.
  void decay();

  double count(int action) const { return counts_.at(action); }
  std::span<const double> centroid(int action, int k) const;
  double mass(int action, int k) const { return masses_(action, k); }

  // Test hook: overwrite one centroid.
  void set_centroid(int action, int k, std::span<const double> c);
  void set_count(int action, double n) { counts_.at(action) = n; }

 private:
  int latent_dim_;
  Params params_;
  std::vector<double> counts_;    // n(a)
  std::vector<Mat> centroids_;    // per action: K x latent_dim
  Mat masses_;                    // W(a,k)
};

}  // namespace rs2
