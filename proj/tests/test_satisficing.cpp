#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "rs2/aspiration.hpp"
#include "rs2/mat.hpp"
#include "rs2/mlp.hpp"
#include "rs2/policy.hpp"
#include "rs2/reliability.hpp"
#include "rs2/rnd.hpp"
#include "rs2/rng.hpp"
#include "rs2/satisficing.hpp"

using namespace rs2;

namespace {

ReliabilityEstimator::Params one_centroid() {
  ReliabilityEstimator::Params p;
  p.centroids_per_action = 1;
  return p;
}

double chi_squared(const std::vector<int>& counts, const std::vector<double>& probs, int n) {
  double stat = 0.0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    const double expected = probs[i] * n;
    const double diff = counts[i] - expected;
    stat += diff * diff / expected;
  }
  return stat;
}

Mlp bias_only_net(const std::vector<int>& dims, const std::vector<double>& out_bias) {
  Mlp net = mlp_init(dims, 0);
  for (Mat& w : net.weights) w.fill(0.0);
  net.biases.back() = out_bias;
  return net;
}

}  // namespace

// ---------------------------------------------------------------- rs_values

TEST_CASE("bandit values weight the aspiration gap by trial share") {
  const std::vector<double> counts = {5.0, 5.0};
  const std::vector<double> means = {0.6, 0.4};
  const auto out = rs_values(counts, means, 0.5);
  CHECK(out[0] == doctest::Approx(0.05).epsilon(1e-12));
  CHECK(out[1] == doctest::Approx(-0.05).epsilon(1e-12));
}

TEST_CASE("bandit values vanish exactly when every arm sits on the aspiration") {
  const std::vector<double> counts = {3.0, 1.0, 2.0};
  const std::vector<double> means = {0.5, 0.5, 0.5};
  for (double v : rs_values(counts, means, 0.5)) CHECK(v == 0.0);
}

TEST_CASE("bandit values prefer the least-tried arm below the aspiration") {
  // Equal means below aleph make every value negative and proportional to
  // the trial count, so the best score belongs to the fewest trials.
  const std::vector<double> means = {0.2, 0.2, 0.2};
  for (int a = 0; a < 3; ++a) {
    std::vector<double> counts = {3.0, 3.0, 3.0};
    counts[a] = 1.0;
    const auto out = rs_values(counts, means, 0.5);
    CHECK(argmax(out) == a);
  }
}

TEST_CASE("bandit values match a from-scratch evaluation on random instances") {
  Rng rng(101);
  std::uniform_real_distribution<double> unif(0.1, 5.0);
  std::uniform_real_distribution<double> val(-1.0, 1.0);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    std::vector<double> counts(n), means(n);
    for (int a = 0; a < n; ++a) {
      counts[a] = unif(rng);
      means[a] = val(rng);
    }
    const double aleph = val(rng);
    const auto out = rs_values(counts, means, aleph);
    double total = 0.0;
    for (double c : counts) total += c;
    for (int a = 0; a < n; ++a) {
      const double reference = (counts[a] * (means[a] - aleph)) / total;
      CHECK(out[a] == doctest::Approx(reference).epsilon(1e-12));
    }
  }
}

TEST_CASE("bandit values reject empty, mismatched and unvisited inputs") {
  const std::vector<double> empty;
  const std::vector<double> two = {1.0, 1.0};
  CHECK_THROWS_AS((void)rs_values(empty, empty, 0.0), std::invalid_argument);
  CHECK_THROWS_AS((void)rs_values(two, std::vector<double>{1.0}, 0.0), std::invalid_argument);
  CHECK_THROWS_AS((void)rs_values(std::vector<double>{0.0, 0.0}, two, 0.0),
                  std::invalid_argument);
}

// ------------------------------------------------------------- reliability

TEST_CASE("reliability is exactly uniform before any selection") {
  Rng rng(7);
  ReliabilityEstimator est(3, 4, {}, rng);
  const std::vector<double> z = {0.1, -0.2, 0.3, 0.4};
  const auto rho = est.reliability(z);
  REQUIRE(rho.size() == 3);
  for (double r : rho) CHECK(r == 1.0 / 3.0);
}

TEST_CASE("reliability reproduces the two-action softmax case") {
  // Counts (2, 1) with both centroids at distance 1 give weighted counts of
  // n/(1+eps), so rho is softmax(2, 1) up to the distance guard.
  Rng rng(11);
  ReliabilityEstimator est(2, 2, one_centroid(), rng);
  est.set_centroid(0, 0, std::vector<double>{1.0, 0.0});
  est.set_centroid(1, 0, std::vector<double>{0.0, 1.0});
  est.set_count(0, 2.0);
  est.set_count(1, 1.0);

  const std::vector<double> z = {0.0, 0.0};
  const auto rho = est.reliability(z);
  const double e2 = std::exp(2.0), e1 = std::exp(1.0);
  CHECK(rho[0] == doctest::Approx(e2 / (e2 + e1)).epsilon(1e-9));
  CHECK(rho[1] == doctest::Approx(e1 / (e2 + e1)).epsilon(1e-9));
  CHECK(rho[0] == doctest::Approx(0.7310585786300049).epsilon(1e-9));
  CHECK(rho[1] == doctest::Approx(0.2689414213699951).epsilon(1e-9));
}

TEST_CASE("reliability concentrates on an action whose centroid is hit exactly") {
  Rng rng(13);
  ReliabilityEstimator est(3, 2, one_centroid(), rng);
  const std::vector<double> z = {0.25, -0.75};
  est.set_centroid(0, 0, z);
  for (int a = 0; a < 3; ++a) est.set_count(a, 1.0);

  const auto rho = est.reliability(z);
  // Zero distance floors at the guard, so action 0's weighted count is ~1e12.
  CHECK(rho[0] == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(rho[0] + rho[1] + rho[2] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("reliability stays a strictly positive distribution under random use") {
  Rng rng(17);
  ReliabilityEstimator est(4, 6, {}, rng);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> z(6);
  for (int step = 0; step < 200; ++step) {
    for (double& v : z) v = normal(rng);
    est.update(z, static_cast<int>(rng() % 4));
    const auto rho = est.reliability(z);
    double sum = 0.0;
    for (double r : rho) {
      CHECK(r > 0.0);
      sum += r;
    }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("one selection leaves a decayed unit count on the chosen action") {
  Rng rng(19);
  ReliabilityEstimator est(3, 2, {}, rng);
  est.update(std::vector<double>{0.5, 0.5}, 1);
  // Increment happens before the decay: (0 + 1) * 0.9.
  CHECK(est.count(1) == 0.9);
  CHECK(est.count(0) == 0.0);
  CHECK(est.count(2) == 0.0);
}

TEST_CASE("decay reaches every action, not just the chosen one") {
  Rng rng(23);
  ReliabilityEstimator est(2, 2, {}, rng);
  est.set_count(1, 5.0);
  est.update(std::vector<double>{0.0, 0.0}, 0);
  CHECK(est.count(1) == 4.5);
}

TEST_CASE("repeated selection drives the count to its fixed point") {
  // n <- (n + 1) * 0.9 converges to 9 from below.
  Rng rng(29);
  ReliabilityEstimator est(2, 2, {}, rng);
  const std::vector<double> z = {1.0, -1.0};
  double prev = 0.0;
  for (int step = 0; step < 200; ++step) {
    est.update(z, 0);
    CHECK(est.count(0) > prev);
    prev = est.count(0);
  }
  CHECK(est.count(0) < 9.0);
  CHECK(std::abs(est.count(0) - 9.0) < 1e-6);
}

TEST_CASE("centroid update is a mass-weighted pull executed before the decay") {
  Rng rng(31);
  ReliabilityEstimator est(2, 2, one_centroid(), rng);
  est.set_centroid(0, 0, std::vector<double>{1.0, 0.0});
  const std::vector<double> far(est.centroid(1, 0).begin(), est.centroid(1, 0).end());

  est.update(std::vector<double>{0.0, 0.0}, 0);
  // Unit mass and weight 1/(1+eps) average the centroid halfway to z; the
  // combined mass 2 is then decayed to 1.8.
  CHECK(est.centroid(0, 0)[0] == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(est.centroid(0, 0)[1] == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(est.mass(0, 0) == doctest::Approx(1.8).epsilon(1e-9));
  // Unchosen action: mass decays, centroid does not move.
  CHECK(est.mass(1, 0) == 0.9);
  CHECK(std::vector<double>(est.centroid(1, 0).begin(), est.centroid(1, 0).end()) == far);
}

TEST_CASE("centroids of the chosen action contract onto a repeated latent") {
  Rng rng(37);
  ReliabilityEstimator est(2, 3, {}, rng);
  const std::vector<double> z = {0.3, -0.6, 0.9};
  std::vector<double> initial(est.params().centroids_per_action);
  std::vector<double> dist(initial.size());
  for (int k = 0; k < static_cast<int>(initial.size()); ++k) {
    initial[k] = std::sqrt(squared_distance(z, est.centroid(0, k)));
  }
  for (int step = 0; step < 100; ++step) {
    std::vector<double> before(dist.size());
    for (int k = 0; k < static_cast<int>(dist.size()); ++k) {
      before[k] = std::sqrt(squared_distance(z, est.centroid(0, k)));
    }
    est.update(z, 0);
    for (int k = 0; k < static_cast<int>(dist.size()); ++k) {
      dist[k] = std::sqrt(squared_distance(z, est.centroid(0, k)));
      // Below ~1e-12 the distance only wiggles by rounding noise.
      if (before[k] > 1e-12) CHECK(dist[k] <= before[k]);
    }
  }
  for (int k = 0; k < static_cast<int>(dist.size()); ++k) {
    CHECK(dist[k] < 1e-3 * initial[k]);
  }
}

TEST_CASE("reliability estimator rejects malformed construction and inputs") {
  Rng rng(41);
  ReliabilityEstimator::Params bad_k;
  bad_k.centroids_per_action = 0;
  CHECK_THROWS_AS(ReliabilityEstimator(2, 2, bad_k, rng), std::invalid_argument);
  ReliabilityEstimator::Params bad_gamma;
  bad_gamma.forgetting = 1.0;
  CHECK_THROWS_AS(ReliabilityEstimator(2, 2, bad_gamma, rng), std::invalid_argument);
  CHECK_THROWS_AS(ReliabilityEstimator(0, 2, {}, rng), std::invalid_argument);
  CHECK_THROWS_AS(ReliabilityEstimator(2, 0, {}, rng), std::invalid_argument);

  ReliabilityEstimator est(2, 3, {}, rng);
  const std::vector<double> wrong = {1.0, 2.0};
  CHECK_THROWS_AS((void)est.reliability(wrong), std::invalid_argument);
  CHECK_THROWS_AS(est.update(wrong, 0), std::invalid_argument);
  CHECK_THROWS_AS(est.update(std::vector<double>{1.0, 2.0, 3.0}, 2), std::invalid_argument);
  CHECK_THROWS_AS(est.set_centroid(0, 0, wrong), std::invalid_argument);
}

TEST_CASE("initial centroids are unit norm and seed-reproducible") {
  Rng r1(43), r2(43), r3(44);
  ReliabilityEstimator a(3, 5, {}, r1);
  ReliabilityEstimator b(3, 5, {}, r2);
  ReliabilityEstimator c(3, 5, {}, r3);
  bool any_differs = false;
  for (int act = 0; act < 3; ++act) {
    for (int k = 0; k < 3; ++k) {
      double norm_sq = 0.0;
      for (double v : a.centroid(act, k)) norm_sq += v * v;
      CHECK(norm_sq == doctest::Approx(1.0).epsilon(1e-12));
      const auto ra = a.centroid(act, k);
      const auto rb = b.centroid(act, k);
      const auto rc = c.centroid(act, k);
      for (std::size_t i = 0; i < ra.size(); ++i) {
        CHECK(ra[i] == rb[i]);
        if (ra[i] != rc[i]) any_differs = true;
      }
      CHECK(a.mass(act, k) == 1.0);
    }
  }
  CHECK(any_differs);
}

// -------------------------------------------------------------- aspiration

TEST_CASE("state aspiration blends the global target with the best value") {
  AspirationController ctl(195.0);
  ctl.record_return(97.5);
  CHECK(ctl.value_estimate() == 97.5);
  CHECK(ctl.beta() == 0.5);

  const std::vector<double> q = {100.0, 80.0};
  const auto [aleph, beta] = ctl.aspiration(q);
  CHECK(beta == 0.5);
  CHECK(aleph == 147.5);
}

TEST_CASE("fresh controller aims fully at the global aspiration") {
  AspirationController ctl(10.0);
  CHECK(ctl.value_estimate() == 0.0);
  CHECK(ctl.beta() == 1.0);
  const auto [aleph, beta] = ctl.aspiration(std::vector<double>{3.0, 1.0});
  CHECK(aleph == 10.0);
}

TEST_CASE("meeting the global target pins the aspiration to the best value") {
  AspirationController ctl(10.0);
  ctl.record_return(12.0);
  CHECK(ctl.beta() == 0.0);
  const auto [aleph, beta] = ctl.aspiration(std::vector<double>{3.0, 7.0});
  CHECK(aleph == 7.0);
}

TEST_CASE("beta clamps on both sides") {
  AspirationController high(10.0);
  high.record_return(100.0);
  CHECK(high.beta() == 0.0);
  AspirationController low(10.0);
  low.record_return(-50.0);
  CHECK(low.beta() == 1.0);
}

TEST_CASE("value estimate is a sliding window over recent returns") {
  AspirationController ctl(100.0, 100);
  for (int i = 0; i < 50; ++i) ctl.record_return(0.0);
  for (int i = 0; i < 100; ++i) ctl.record_return(10.0);
  // The zeros have been pushed out of the 100-episode window.
  CHECK(ctl.value_estimate() == 10.0);

  AspirationController small(100.0, 2);
  small.record_return(2.0);
  small.record_return(4.0);
  small.record_return(6.0);
  CHECK(small.value_estimate() == 5.0);
}

TEST_CASE("aspiration stays inside the span of target and best value") {
  Rng rng(47);
  std::uniform_real_distribution<double> ret(-50.0, 400.0);
  std::uniform_real_distribution<double> val(-200.0, 300.0);
  AspirationController ctl(195.0, 10);
  for (int trial = 0; trial < 1000; ++trial) {
    ctl.record_return(ret(rng));
    std::vector<double> q(3);
    for (double& v : q) v = val(rng);
    const auto [aleph, beta] = ctl.aspiration(q);
    CHECK(beta >= 0.0);
    CHECK(beta <= 1.0);
    const double best = *std::max_element(q.begin(), q.end());
    CHECK(aleph >= std::min(195.0, best) - 1e-12);
    CHECK(aleph <= std::max(195.0, best) + 1e-12);
  }
}

TEST_CASE("aspiration controller rejects a non-positive target or empty window") {
  CHECK_THROWS_AS(AspirationController(0.0), std::invalid_argument);
  CHECK_THROWS_AS(AspirationController(-5.0), std::invalid_argument);
  CHECK_THROWS_AS(AspirationController(10.0, 0), std::invalid_argument);
}

// -------------------------------------------------------------- satisficed

TEST_CASE("satisficed is a non-strict comparison against the best value") {
  const std::vector<double> q = {0.5, 0.75};
  CHECK_FALSE(satisficed(q, 1.0));
  CHECK(satisficed(q, 0.75));
  CHECK(satisficed(q, 0.6));
  CHECK_THROWS_AS((void)satisficed(std::vector<double>{}, 0.0), std::invalid_argument);
}

// -------------------------------------------------------------- rs2_values

TEST_CASE("exploitation values scale the aspiration gap by reliability") {
  const std::vector<double> q = {1.0, 0.6};
  const std::vector<double> rho = {0.5, 0.5};
  const auto out = rs2_values(q, rho, 0.8);
  CHECK(out[0] == doctest::Approx(0.1).epsilon(1e-12));
  CHECK(out[1] == doctest::Approx(-0.1).epsilon(1e-12));

  for (double v : rs2_values(std::vector<double>{0.3, 0.3}, rho, 0.3)) CHECK(v == 0.0);
}

TEST_CASE("uniform reliability keeps the greedy action on top") {
  Rng rng(53);
  std::uniform_real_distribution<double> val(-2.0, 2.0);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    std::vector<double> q(n);
    for (double& v : q) v = val(rng);
    const std::vector<double> rho(n, 1.0 / n);
    const double aleph = val(rng);
    CHECK(argmax(rs2_values(q, rho, aleph)) == argmax(q));
  }
}

// -------------------------------------------------------------- srs_values

TEST_CASE("exploration values reproduce the uniform-reliability case") {
  // deltas (0.5, 0.25) -> rho_hat (1/3, 2/3); b = 0.5 / (1/3) = 1.5;
  // I = (1.5/3 - 0.5, 3/3 - 0.5) = (0, 0.5).
  const std::vector<double> q = {0.5, 0.75};
  const std::vector<double> rho = {0.5, 0.5};
  const auto out = srs_values(q, rho, 1.0);
  CHECK(out[0] == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(out[1] == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("exploration values reproduce the skewed-reliability case") {
  // Same deltas, rho (0.9, 0.1): b = max(0.9 * 3, 0.1 * 1.5) = 2.7;
  // I = (2.7/3 - 0.9, 2.7 * 2/3 - 0.1) = (0, 1.7).
  const std::vector<double> q = {0.5, 0.75};
  const std::vector<double> rho = {0.9, 0.1};
  const auto out = srs_values(q, rho, 1.0);
  CHECK(out[0] == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(out[1] == doctest::Approx(1.7).epsilon(1e-9));
}

TEST_CASE("identical shortfalls with uniform reliability score zero") {
  const std::vector<double> q(4, 0.2);
  const std::vector<double> rho(4, 0.25);
  for (double v : srs_values(q, rho, 0.7)) {
    CHECK(std::abs(v) <= 1e-9);
  }
}

TEST_CASE("exploration values demand every value below the aspiration") {
  const std::vector<double> rho = {0.5, 0.5};
  CHECK_THROWS_AS((void)srs_values(std::vector<double>{0.5, 1.0}, rho, 1.0), std::logic_error);
  CHECK_THROWS_AS((void)srs_values(std::vector<double>{0.5, 1.5}, rho, 1.0), std::logic_error);
}

TEST_CASE("exploration values satisfy their invariants on random instances") {
  Rng rng(59);
  std::uniform_real_distribution<double> val(-2.0, 2.0);
  std::uniform_real_distribution<double> gap(0.01, 3.0);
  std::normal_distribution<double> normal(0.0, 1.0);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    std::vector<double> q(n), logits(n);
    for (double& v : q) v = val(rng);
    for (double& v : logits) v = normal(rng);
    const std::vector<double> rho = softmax(logits);
    const double aleph = *std::max_element(q.begin(), q.end()) + gap(rng);

    const auto out = srs_values(q, rho, aleph);

    // From-scratch evaluation of the same definition.
    double inv_sum = 0.0;
    for (int a = 0; a < n; ++a) inv_sum += 1.0 / (aleph - q[a]);
    std::vector<double> rho_hat(n);
    double hat_sum = 0.0, b = 0.0;
    for (int a = 0; a < n; ++a) {
      rho_hat[a] = (1.0 / inv_sum) / (aleph - q[a]);
      hat_sum += rho_hat[a];
      b = std::max(b, rho[a] / (rho_hat[a] + 1e-12));
    }
    CHECK(hat_sum == doctest::Approx(1.0).epsilon(1e-12));

    double min_i = out[0];
    for (int a = 0; a < n; ++a) {
      CHECK(out[a] == doctest::Approx(b * rho_hat[a] - rho[a]).epsilon(1e-9));
      CHECK(out[a] >= -1e-6);
      min_i = std::min(min_i, out[a]);
    }
    CHECK(min_i >= -1e-6);
    CHECK(min_i <= 1e-6);
  }
}

// ------------------------------------------------------------ select_action

TEST_CASE("equal scores sample uniformly") {
  const std::vector<double> scores(4, 1.3);
  Rng rng(61);
  std::vector<int> counts(4, 0);
  const int n = 10000;
  for (int i = 0; i < n; ++i) counts[select_action(scores, rng)] += 1;
  // Chi-squared, 3 dof, p = 0.001 cutoff.
  CHECK(chi_squared(counts, std::vector<double>(4, 0.25), n) < 16.27);
}

TEST_CASE("a dominant score is chosen at its softmax frequency") {
  const std::vector<double> scores = {10.0, 0.0};
  Rng rng(67);
  int first = 0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    if (select_action(scores, rng) == 0) first += 1;
  }
  // p = e^10 / (e^10 + 1) = 0.9999546; expect about 4.5 misses in 1e5 draws.
  CHECK(first >= n - 30);
  CHECK(first < n);
}

TEST_CASE("low temperature collapses sampling onto the argmax") {
  const std::vector<double> scores = {3.0, 5.0, 1.0};
  Rng rng(71);
  for (int i = 0; i < 1000; ++i) {
    CHECK(select_action(scores, rng, 1e-4) == 1);
  }
}

TEST_CASE("high temperature flattens sampling towards uniform") {
  const std::vector<double> scores = {3.0, 5.0, 1.0};
  Rng rng(73);
  std::vector<int> counts(3, 0);
  const int n = 10000;
  for (int i = 0; i < n; ++i) counts[select_action(scores, rng, 1e6)] += 1;
  CHECK(chi_squared(counts, std::vector<double>(3, 1.0 / 3.0), n) < 13.82);
}

TEST_CASE("action sampling is seed-deterministic and validates its inputs") {
  const std::vector<double> scores = {0.3, 0.1, 0.6};
  Rng r1(79), r2(79);
  for (int i = 0; i < 100; ++i) {
    CHECK(select_action(scores, r1) == select_action(scores, r2));
  }
  Rng rng(83);
  CHECK_THROWS_AS((void)select_action(std::vector<double>{}, rng), std::invalid_argument);
  CHECK_THROWS_AS((void)select_action(scores, rng, 0.0), std::invalid_argument);
  CHECK_THROWS_AS((void)select_action(scores, rng, -1.0), std::invalid_argument);
}

// ----------------------------------------------------------------- epsilon

TEST_CASE("exponential epsilon schedule hits both endpoints and decays") {
  EpsilonSchedule s;
  s.mode = EpsilonSchedule::Mode::ExponentialDecay;
  s.start = 1.0;
  s.end = 0.01;
  s.total_episodes = 600;
  CHECK(s.value(0) == 1.0);
  CHECK(s.value(600) == doctest::Approx(0.01).epsilon(1e-12));
  CHECK(s.value(300) == doctest::Approx(0.1).epsilon(1e-12));
  CHECK(s.value(10000) == s.value(600));
  CHECK(s.value(-5) == s.value(0));
  double prev = s.value(0);
  for (int e = 1; e <= 600; ++e) {
    const double cur = s.value(e);
    CHECK(cur < prev);
    prev = cur;
  }
  CHECK(prev >= 0.01);
}

TEST_CASE("constant epsilon schedule ignores the episode index") {
  EpsilonSchedule s;
  s.start = 0.1;
  for (int e : {0, 1, 100, 100000}) CHECK(s.value(e) == 0.1);
}

TEST_CASE("exponential schedule rejects degenerate endpoints") {
  EpsilonSchedule s;
  s.mode = EpsilonSchedule::Mode::ExponentialDecay;
  s.start = 0.0;
  s.end = 0.01;
  s.total_episodes = 100;
  CHECK_THROWS_AS((void)s.value(0), std::logic_error);
  s.start = 1.0;
  s.total_episodes = 0;
  CHECK_THROWS_AS((void)s.value(0), std::logic_error);
}

// ----------------------------------------------------------- epsilon-greedy

TEST_CASE("epsilon one behaves uniformly, epsilon zero greedily") {
  const Mlp net = bias_only_net({8, 8, 4}, {1.0, 0.0, 0.0, 0.0});
  const std::vector<double> obs(8, 0.2);
  const ForwardTrace trace = mlp_forward(net, obs);

  EpsilonSchedule explore;
  explore.start = 1.0;
  EpsilonGreedyPolicy random_policy(explore);
  Rng rng(89);
  std::vector<int> counts(4, 0);
  const int n = 10000;
  for (int i = 0; i < n; ++i) counts[random_policy.behave(trace, rng)] += 1;
  CHECK(chi_squared(counts, std::vector<double>(4, 0.25), n) < 16.27);

  EpsilonSchedule exploit;
  exploit.start = 0.0;
  EpsilonGreedyPolicy greedy_policy(exploit);
  for (int i = 0; i < 1000; ++i) CHECK(greedy_policy.behave(trace, rng) == 0);
}

TEST_CASE("epsilon-greedy reads its schedule through episode boundaries") {
  EpsilonSchedule s;
  s.mode = EpsilonSchedule::Mode::ExponentialDecay;
  s.start = 1.0;
  s.end = 0.01;
  s.total_episodes = 100;
  EpsilonGreedyPolicy policy(s);
  CHECK(policy.current_epsilon() == 1.0);
  policy.begin_episode(100);
  CHECK(policy.current_epsilon() == doctest::Approx(0.01).epsilon(1e-12));
}

// -------------------------------------------------------------- rs2 policy

TEST_CASE("satisficed policy samples the exploitation softmax") {
  const Mlp net = bias_only_net({8, 8, 4}, {3.0, 1.0, 0.5, 0.0});
  const ForwardTrace trace = mlp_forward(net, std::vector<double>(8, 0.1));

  Rng init(97);
  Rs2Policy base(4, 8, 10.0, 10, {}, init);
  for (int i = 0; i < 10; ++i) base.record_episode_return(12.0);
  REQUIRE(base.beta().value() == 0.0);

  // With beta 0 the aspiration equals max q, the state is satisficed, and a
  // fresh estimator keeps rho uniform, so the sampling distribution is the
  // softmax of 0.25 * (q - 3).
  std::vector<double> scores(4);
  for (int a = 0; a < 4; ++a) scores[a] = 0.25 * (trace.output()[a] - 3.0);
  const std::vector<double> expected = softmax(scores);

  Rng rng(101);
  std::vector<int> counts(4, 0);
  const int n = 10000;
  for (int i = 0; i < n; ++i) {
    Rs2Policy fresh = base;  // behaving updates the estimator; isolate draws
    counts[fresh.behave(trace, rng)] += 1;
  }
  for (int a = 0; a < 4; ++a) {
    CHECK(std::abs(static_cast<double>(counts[a]) / n - expected[a]) < 0.02);
  }
  CHECK(argmax(std::vector<double>(counts.begin(), counts.end())) == 0);
}

TEST_CASE("unsatisficed policy samples the exploration softmax") {
  const Mlp net = bias_only_net({8, 8, 4}, {3.0, 1.0, 0.5, 0.0});
  const ForwardTrace trace = mlp_forward(net, std::vector<double>(8, 0.1));

  Rng init(103);
  Rs2Policy base(4, 8, 10.0, 10, {}, init);
  REQUIRE(base.beta().value() == 1.0);

  // Fresh value estimate keeps the aspiration at the global 10, above every
  // q, so the scores follow the shortfall-seeking branch with uniform rho.
  const std::vector<double> rho(4, 0.25);
  const std::vector<double> expected =
      softmax(srs_values(trace.output(), rho, 10.0));

  Rng rng(107);
  std::vector<int> counts(4, 0);
  const int n = 10000;
  for (int i = 0; i < n; ++i) {
    Rs2Policy fresh = base;
    counts[fresh.behave(trace, rng)] += 1;
  }
  for (int a = 0; a < 4; ++a) {
    CHECK(std::abs(static_cast<double>(counts[a]) / n - expected[a]) < 0.02);
  }
}

TEST_CASE("behaving registers the chosen action with the estimator") {
  const Mlp net = bias_only_net({8, 8, 4}, {3.0, 1.0, 0.5, 0.0});
  const ForwardTrace trace = mlp_forward(net, std::vector<double>(8, 0.1));
  Rng init(109);
  Rs2Policy policy(4, 8, 10.0, 10, {}, init);
  Rng rng(113);
  const int chosen = policy.behave(trace, rng);
  for (int a = 0; a < 4; ++a) {
    CHECK(policy.estimator().count(a) == (a == chosen ? 0.9 : 0.0));
  }
}

TEST_CASE("per-episode decay mode defers forgetting to the episode boundary") {
  const Mlp net = bias_only_net({8, 8, 4}, {3.0, 1.0, 0.5, 0.0});
  const ForwardTrace trace = mlp_forward(net, std::vector<double>(8, 0.1));
  Rng init(127);
  Rs2Policy::Params params;
  params.decay_per_episode = true;
  Rs2Policy policy(4, 8, 10.0, 10, params, init);
  Rng rng(131);
  const int chosen = policy.behave(trace, rng);
  CHECK(policy.estimator().count(chosen) == 1.0);
  policy.record_episode_return(0.0);
  CHECK(policy.estimator().count(chosen) == 0.9);
}

TEST_CASE("recorded returns move beta exactly as the controller dictates") {
  Rng init(137);
  Rs2Policy policy(4, 8, 10.0, 10, {}, init);
  CHECK(policy.beta().value() == 1.0);
  for (int i = 0; i < 10; ++i) policy.record_episode_return(5.0);
  CHECK(policy.beta().value() == 0.5);
  for (int i = 0; i < 10; ++i) policy.record_episode_return(10.0);
  CHECK(policy.beta().value() == 0.0);
}

// --------------------------------------------------------------------- rnd

TEST_CASE("a predictor that equals its target reports zero error") {
  RndModule rnd({4, 16, 8}, 7, 7);
  const std::vector<double> obs = {0.1, -0.2, 0.3, -0.4};
  CHECK(rnd.raw_error(obs) == 0.0);
  CHECK(rnd.intrinsic(obs) == 0.0);
}

TEST_CASE("the target network never trains") {
  RndModule rnd({4, 16, 8}, 11, 13);
  const Mlp before = rnd.target();
  Mat batch(8, 4);
  Rng rng(139);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  for (double& v : batch.data) v = unif(rng);
  for (int step = 0; step < 50; ++step) {
    const double loss = rnd.train_on_observations(batch);
    CHECK(loss >= 0.0);
  }
  for (std::size_t l = 0; l < before.weights.size(); ++l) {
    CHECK(rnd.target().weights[l].data == before.weights[l].data);
    CHECK(rnd.target().biases[l] == before.biases[l]);
  }
}

TEST_CASE("training shrinks the error on a repeated observation") {
  RndModule rnd({4, 32, 16}, 17, 19);
  Mat obs(1, 4);
  obs.data = {0.5, -0.25, 0.75, -1.0};

  const double initial = rnd.raw_error(obs.data);
  REQUIRE(initial > 0.0);
  double prev_loss = -1.0;
  for (int step = 0; step < 500; ++step) {
    const double loss = rnd.train_on_observations(obs);
    CHECK(loss >= 0.0);
    if (step == 0) prev_loss = loss;
  }
  const double trained = rnd.raw_error(obs.data);
  CHECK(trained < 0.1 * initial);
  CHECK(trained < prev_loss);

  // A held-out observation keeps a much larger error than the trained one.
  const std::vector<double> held_out = {-0.9, 0.6, -0.3, 0.8};
  CHECK(rnd.raw_error(held_out) >= 5.0 * trained);
}

TEST_CASE("intrinsic bonuses are normalised by the spread of past raw errors") {
  RndModule rnd({3, 8, 4}, 23, 29);
  const std::vector<double> o1 = {1.0, 0.0, 0.0};
  const std::vector<double> o2 = {0.0, 1.0, 0.0};
  const std::vector<double> o3 = {0.0, 0.0, 1.0};

  CHECK(rnd.recorded_count() == 0);
  CHECK(rnd.running_std() == 0.0);

  const double r1 = rnd.raw_error(o1);
  CHECK(rnd.intrinsic(o1) == r1);  // no history yet: divisor 1
  const double r2 = rnd.raw_error(o2);
  CHECK(rnd.intrinsic(o2) == r2);  // one sample has zero spread: divisor 1
  CHECK(rnd.recorded_count() == 2);

  const double sd = std::abs(r1 - r2) / 2.0;  // population std of {r1, r2}
  CHECK(rnd.running_std() == doctest::Approx(sd).epsilon(1e-12));
  const double r3 = rnd.raw_error(o3);
  CHECK(rnd.intrinsic(o3) == doctest::Approx(r3 / sd).epsilon(1e-12));
  CHECK(rnd.recorded_count() == 3);
}

TEST_CASE("rnd training consumes next observations from a batch") {
  RndModule rnd({2, 8, 4}, 31, 37);
  Transition t;
  t.observation = {9.0, 9.0};
  t.next_observation = {0.25, -0.5};
  const Transition* batch[] = {&t, &t};
  const double before = rnd.raw_error(t.next_observation);
  for (int step = 0; step < 200; ++step) (void)rnd.train_on(batch);
  CHECK(rnd.raw_error(t.next_observation) < before);
  CHECK_THROWS_AS((void)rnd.train_on(std::span<const Transition* const>{}),
                  std::invalid_argument);
}
