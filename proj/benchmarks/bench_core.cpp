#include <benchmark/benchmark.h>

#include "rs2/mlp.hpp"
#include "rs2/pyramid.hpp"
#include "rs2/reliability.hpp"
#include "rs2/satisficing.hpp"

namespace {

rs2::Mat random_batch(int rows, int cols, std::uint64_t seed) {
  rs2::Mat m(rows, cols);
  rs2::Rng rng(seed);
  std::normal_distribution<double> dist(0.0, 1.0);
  for (double& v : m.data) v = dist(rng);
  return m;
}

static void BM_MlpForwardSingle(benchmark::State& state) {
  const rs2::Mlp net = rs2::mlp_init({4, 128, 128, 2}, 1);
  const std::vector<double> obs = {0.01, -0.02, 0.03, -0.04};
  for (auto _ : state) {
    benchmark::DoNotOptimize(rs2::mlp_forward(net, obs));
  }
}
BENCHMARK(BM_MlpForwardSingle);

static void BM_MlpBackwardBatch(benchmark::State& state) {
  const rs2::Mlp net = rs2::mlp_init({4, 128, 128, 2}, 1);
  const rs2::Mat inputs = random_batch(64, 4, 2);
  const std::vector<int> actions(64, 1);
  const std::vector<double> targets(64, 0.5);
  rs2::Gradients grads = rs2::Gradients::zeros_like(net);
  rs2::MlpWorkspace ws;
  for (auto _ : state) {
    benchmark::DoNotOptimize(rs2::mlp_backward(net, inputs, actions, targets, grads, ws));
  }
}
BENCHMARK(BM_MlpBackwardBatch);

static void BM_PyramidBackwardBatch(benchmark::State& state) {
  const rs2::Mlp net = rs2::mlp_init({32, 512, 4}, 1);
  const rs2::Mat inputs = random_batch(64, 32, 2);
  const std::vector<int> actions(64, 3);
  const std::vector<double> targets(64, 0.5);
  rs2::Gradients grads = rs2::Gradients::zeros_like(net);
  rs2::MlpWorkspace ws;
  for (auto _ : state) {
    benchmark::DoNotOptimize(rs2::mlp_backward(net, inputs, actions, targets, grads, ws));
  }
}
BENCHMARK(BM_PyramidBackwardBatch);

static void BM_Reliability(benchmark::State& state) {
  rs2::Rng rng(7);
  rs2::ReliabilityEstimator est(4, 512, {}, rng);
  const rs2::Mat z = random_batch(1, 512, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(est.reliability(z.row(0)));
  }
}
BENCHMARK(BM_Reliability);

static void BM_ReliabilityUpdate(benchmark::State& state) {
  rs2::Rng rng(7);
  rs2::ReliabilityEstimator est(4, 512, {}, rng);
  const rs2::Mat z = random_batch(1, 512, 3);
  int action = 0;
  for (auto _ : state) {
    est.update(z.row(0), action);
    action = (action + 1) % 4;
  }
}
BENCHMARK(BM_ReliabilityUpdate);

static void BM_SrsValues(benchmark::State& state) {
  const std::vector<double> q = {0.3, 0.5, 0.1, 0.4};
  const std::vector<double> rho = {0.25, 0.25, 0.25, 0.25};
  for (auto _ : state) {
    benchmark::DoNotOptimize(rs2::srs_values(q, rho, 1.0));
  }
}
BENCHMARK(BM_SrsValues);

static void BM_PyramidOracle(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(rs2::pyramid_terminal_counts(6, 2));
  }
}
BENCHMARK(BM_PyramidOracle);

}  // namespace

BENCHMARK_MAIN();
