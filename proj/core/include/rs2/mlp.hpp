#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rs2/mat.hpp"

namespace rs2 {

// Fully connected network with ReLU hidden layers and a linear output layer.
// weights[l] has shape dims[l+1] x dims[l]; all arithmetic is double.
struct Mlp {
  std::vector<int> dims;
  std::vector<Mat> weights;
  std::vector<std::vector<double>> biases;

  int layer_count() const { return static_cast<int>(weights.size()); }
  int input_dim() const { return dims.front(); }
  int output_dim() const { return dims.back(); }
  int last_hidden_dim() const { return dims[dims.size() - 2]; }
};

// He-initialised weights (normal, std sqrt(2/fan_in)), zero biases. Weights
// are drawn layer by layer in row-major order, so a seed pins the exact net.
Mlp mlp_init(const std::vector<int>& dims, std::uint64_t seed);

// Activations recorded by a single-sample forward pass. pre[l]/post[l] are
// the pre- and post-activation vectors of layer l; the output layer's
// activation is the identity, so output() == pre.back().
struct ForwardTrace {
  std::vector<double> input;
  std::vector<std::vector<double>> pre;
  std::vector<std::vector<double>> post;

  const std::vector<double>& output() const { return post.back(); }
  // Hidden representation feeding the output layer (the RS^2 latent).
  const std::vector<double>& last_hidden() const { return post[post.size() - 2]; }
};

ForwardTrace mlp_forward(const Mlp& net, std::span<const double> input);

// Per-parameter gradient accumulator shaped like a given net.
struct Gradients {
  std::vector<Mat> weights;
  std::vector<std::vector<double>> biases;

  static Gradients zeros_like(const Mlp& net);
  void set_zero();
};

// Scratch batch activations, reused across update steps.
struct MlpWorkspace {
  std::vector<Mat> pre;
  std::vector<Mat> post;
  std::vector<Mat> delta;
};

// Batch forward: inputs is B x input_dim, outputs becomes B x output_dim.
void mlp_forward_batch(const Mlp& net, const Mat& inputs, Mat& outputs, MlpWorkspace& ws);

// Mean squared error on one selected output unit per sample:
//   loss = (1/B) sum_i (out_i[actions[i]] - targets[i])^2.
// Fills grads with d loss / d params and returns the loss.
double mlp_backward(const Mlp& net, const Mat& inputs, std::span<const int> actions,
                    std::span<const double> targets, Gradients& grads, MlpWorkspace& ws);

// Mean squared error over every output unit (used by the RND predictor):
//   loss = (1/B) sum_i ||out_i - targets_i||^2.
double mlp_backward_dense(const Mlp& net, const Mat& inputs, const Mat& targets,
                          Gradients& grads, MlpWorkspace& ws);

// Adam optimiser state. Moments are kept per parameter; `step` counts
// completed updates and drives the bias correction.
struct AdamState {
  double lr = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
  long long step = 0;
  std::vector<Mat> m_w, v_w;
  std::vector<std::vector<double>> m_b, v_b;

  static AdamState init(const Mlp& net, double lr);
};

void adam_step(AdamState& state, Mlp& net, const Gradients& grads);

}  // namespace rs2
