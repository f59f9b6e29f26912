#include "rs2/mlp.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <random>
#include <stdexcept>
#include <utility>

namespace rs2 {

namespace {

using RowMat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using MapConst = Eigen::Map<const RowMat>;
using MapMut = Eigen::Map<RowMat>;

MapConst map(const Mat& m) { return {m.data.data(), m.rows, m.cols}; }
MapMut map(Mat& m) { return {m.data.data(), m.rows, m.cols}; }

void ensure_shape(Mat& m, int rows, int cols) {
  if (m.rows != rows || m.cols != cols) m.resize(rows, cols);
}

void prepare_workspace(const Mlp& net, int batch, MlpWorkspace& ws) {
  const int layers = net.layer_count();
  ws.pre.resize(layers);
  ws.post.resize(layers);
  ws.delta.resize(layers);
  for (int l = 0; l < layers; ++l) {
    ensure_shape(ws.pre[l], batch, net.dims[l + 1]);
    ensure_shape(ws.post[l], batch, net.dims[l + 1]);
    ensure_shape(ws.delta[l], batch, net.dims[l + 1]);
  }
}

void forward_into_workspace(const Mlp& net, const Mat& inputs, MlpWorkspace& ws) {
  if (inputs.cols != net.input_dim()) {
    throw std::invalid_argument("mlp forward: input width does not match net");
  }
  if (inputs.rows <= 0) {
    throw std::invalid_argument("mlp forward: empty batch");
  }
  prepare_workspace(net, inputs.rows, ws);
  const int layers = net.layer_count();
  for (int l = 0; l < layers; ++l) {
    const Mat& below = (l == 0) ? inputs : ws.post[l - 1];
    MapConst in = map(below);
    MapMut pre = map(ws.pre[l]);
    pre.noalias() = in * map(net.weights[l]).transpose();
    pre.rowwise() += Eigen::Map<const Eigen::RowVectorXd>(net.biases[l].data(), net.biases[l].size());
    if (l < layers - 1) {
      map(ws.post[l]) = pre.cwiseMax(0.0);
    } else {
      map(ws.post[l]) = pre;
    }
  }
}

// Backpropagates ws.delta (seeded with d loss / d output pre-activation)
// into grads. relu' is taken as 0 at exactly 0.
void backward_from_workspace(const Mlp& net, const Mat& inputs, Gradients& grads, MlpWorkspace& ws) {
  const int layers = net.layer_count();
  for (int l = layers - 1; l >= 0; --l) {
    const Mat& below_activ = (l == 0) ? inputs : ws.post[l - 1];
    MapConst in = map(below_activ);
    MapConst delta = map(std::as_const(ws.delta[l]));
    map(grads.weights[l]).noalias() = delta.transpose() * in;
    Eigen::Map<Eigen::RowVectorXd>(grads.biases[l].data(), grads.biases[l].size()) = delta.colwise().sum();
    if (l > 0) {
      MapMut below = map(ws.delta[l - 1]);
      below.noalias() = delta * map(net.weights[l]);
      below.array() *= (map(ws.pre[l - 1]).array() > 0.0).cast<double>();
    }
  }
}

}  // namespace

Mlp mlp_init(const std::vector<int>& dims, std::uint64_t seed) {
  if (dims.size() < 3) {
    throw std::invalid_argument("mlp_init: need input, at least one hidden, and output dims");
  }
  for (int d : dims) {
    if (d <= 0) throw std::invalid_argument("mlp_init: non-positive layer dim");
  }
  Mlp net;
  net.dims = dims;
  std::mt19937_64 rng(seed);
  for (std::size_t l = 0; l + 1 < dims.size(); ++l) {
    const int fan_in = dims[l];
    const int fan_out = dims[l + 1];
    std::normal_distribution<double> dist(0.0, std::sqrt(2.0 / fan_in));
    Mat w(fan_out, fan_in);
    for (double& v : w.data) v = dist(rng);
    net.weights.push_back(std::move(w));
    net.biases.emplace_back(fan_out, 0.0);
  }
  return net;
}

ForwardTrace mlp_forward(const Mlp& net, std::span<const double> input) {
  if (static_cast<int>(input.size()) != net.input_dim()) {
    throw std::invalid_argument("mlp_forward: input size does not match net");
  }
  ForwardTrace trace;
  trace.input.assign(input.begin(), input.end());
  const int layers = net.layer_count();
  trace.pre.resize(layers);
  trace.post.resize(layers);
  const std::vector<double>* activ = &trace.input;
  for (int l = 0; l < layers; ++l) {
    auto& pre = trace.pre[l];
    pre = net.biases[l];
    const Mat& w = net.weights[l];
    for (int r = 0; r < w.rows; ++r) {
      pre[r] += dot(w.row(r), *activ);
    }
    trace.post[l] = pre;
    if (l < layers - 1) {
      for (double& v : trace.post[l]) {
        if (v < 0.0) v = 0.0;
      }
    }
    activ = &trace.post[l];
  }
  return trace;
}

Gradients Gradients::zeros_like(const Mlp& net) {
  Gradients g;
  for (int l = 0; l < net.layer_count(); ++l) {
    g.weights.emplace_back(net.weights[l].rows, net.weights[l].cols);
    g.biases.emplace_back(net.biases[l].size(), 0.0);
  }
  return g;
}

void Gradients::set_zero() {
  for (Mat& w : weights) w.fill(0.0);
  for (auto& b : biases) b.assign(b.size(), 0.0);
}

void mlp_forward_batch(const Mlp& net, const Mat& inputs, Mat& outputs, MlpWorkspace& ws) {
  forward_into_workspace(net, inputs, ws);
  outputs = ws.post.back();
}

double mlp_backward(const Mlp& net, const Mat& inputs, std::span<const int> actions,
                    std::span<const double> targets, Gradients& grads, MlpWorkspace& ws) {
  const int batch = inputs.rows;
  if (static_cast<int>(actions.size()) != batch || static_cast<int>(targets.size()) != batch) {
    throw std::invalid_argument("mlp_backward: batch size mismatch");
  }
  forward_into_workspace(net, inputs, ws);
  const Mat& out = ws.post.back();
  Mat& seed = ws.delta.back();
  seed.fill(0.0);
  double loss = 0.0;
  for (int i = 0; i < batch; ++i) {
    const int a = actions[i];
    if (a < 0 || a >= net.output_dim()) {
      throw std::invalid_argument("mlp_backward: action index out of range");
    }
    const double diff = out(i, a) - targets[i];
    loss += diff * diff;
    seed(i, a) = 2.0 * diff / batch;
  }
  backward_from_workspace(net, inputs, grads, ws);
  return loss / batch;
}

double mlp_backward_dense(const Mlp& net, const Mat& inputs, const Mat& targets,
                          Gradients& grads, MlpWorkspace& ws) {
  if (targets.rows != inputs.rows || targets.cols != net.output_dim()) {
    throw std::invalid_argument("mlp_backward_dense: target shape mismatch");
  }
  forward_into_workspace(net, inputs, ws);
  const int batch = inputs.rows;
  const Mat& out = ws.post.back();
  Mat& seed = ws.delta.back();
  double loss = 0.0;
  for (std::size_t i = 0; i < out.data.size(); ++i) {
    const double diff = out.data[i] - targets.data[i];
    loss += diff * diff;
    seed.data[i] = 2.0 * diff / batch;
  }
  backward_from_workspace(net, inputs, grads, ws);
  return loss / batch;
}

AdamState AdamState::init(const Mlp& net, double lr) {
  AdamState s;
  s.lr = lr;
  for (int l = 0; l < net.layer_count(); ++l) {
    s.m_w.emplace_back(net.weights[l].rows, net.weights[l].cols);
    s.v_w.emplace_back(net.weights[l].rows, net.weights[l].cols);
    s.m_b.emplace_back(net.biases[l].size(), 0.0);
    s.v_b.emplace_back(net.biases[l].size(), 0.0);
  }
  return s;
}

void adam_step(AdamState& state, Mlp& net, const Gradients& grads) {
  if (state.m_w.size() != net.weights.size()) {
    throw std::invalid_argument("adam_step: state does not match net");
  }
  state.step += 1;
  const double bc1 = 1.0 - std::pow(state.beta1, static_cast<double>(state.step));
  const double bc2 = 1.0 - std::pow(state.beta2, static_cast<double>(state.step));
  auto update = [&](double& p, double g, double& m, double& v) {
    m = state.beta1 * m + (1.0 - state.beta1) * g;
    v = state.beta2 * v + (1.0 - state.beta2) * g * g;
    const double mhat = m / bc1;
    const double vhat = v / bc2;
    p -= state.lr * mhat / (std::sqrt(vhat) + state.eps);
  };
  for (std::size_t l = 0; l < net.weights.size(); ++l) {
    auto& w = net.weights[l].data;
    const auto& gw = grads.weights[l].data;
    auto& mw = state.m_w[l].data;
    auto& vw = state.v_w[l].data;
    for (std::size_t i = 0; i < w.size(); ++i) update(w[i], gw[i], mw[i], vw[i]);
    auto& b = net.biases[l];
    const auto& gb = grads.biases[l];
    auto& mb = state.m_b[l];
    auto& vb = state.v_b[l];
    for (std::size_t i = 0; i < b.size(); ++i) update(b[i], gb[i], mb[i], vb[i]);
  }
}

}  // namespace rs2
