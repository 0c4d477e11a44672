#include "doctest.h"
#include "pacrl/cross_entropy.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

using namespace pacrl;

TEST_CASE("elite selection follows the level-set definition") {
  // Distinct values: exactly ceil(rho*N) samples make the elite.
  std::vector<double> values = {5, 1, 4, 2, 3};
  EliteSelection elite = select_elite(values, 0.4);
  CHECK(elite.threshold == 4);
  REQUIRE(elite.indices.size() == 2);
  CHECK(values[elite.indices[0]] >= 4);
  CHECK(values[elite.indices[1]] >= 4);

  // Ties at the threshold enlarge the elite past rho*N.
  values = {3, 3, 3, 1, 2};
  elite = select_elite(values, 0.2);
  CHECK(elite.threshold == 3);
  CHECK(elite.indices.size() == 3);
}

TEST_CASE("elite selection matches a sort oracle on 1..1000") {
  std::vector<double> values(1000);
  std::iota(values.begin(), values.end(), 1.0);
  // Deterministic shuffle.
  Rng rng(99);
  for (int i = 999; i > 0; --i) {
    std::swap(values[i], values[rng.uniform_int(i + 1)]);
  }
  EliteSelection elite = select_elite(values, 0.05);
  CHECK(elite.threshold == 951);
  CHECK(elite.indices.size() == 50);
  for (int index : elite.indices) CHECK(values[index] >= 951);
}

TEST_CASE("bernoulli update is the elite frequency of ones") {
  CHECK(bernoulli_update({{1}, {1}, {1}})[0] == 1.0);
  CHECK(bernoulli_update({{1}, {0}, {1}, {1}})[0] == 0.75);
  CHECK_THROWS_AS(bernoulli_update({}), std::invalid_argument);

  // Random elites against an independent counting oracle.
  Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 1 + rng.uniform_int(20);
    int length = 1 + rng.uniform_int(8);
    std::vector<std::vector<std::uint8_t>> elite(n, std::vector<std::uint8_t>(length));
    std::vector<int> counts(length, 0);
    for (auto& sample : elite) {
      for (int j = 0; j < length; ++j) {
        sample[j] = rng.bernoulli(0.5) ? 1 : 0;
        counts[j] += sample[j];
      }
    }
    BernoulliVector p = bernoulli_update(elite);
    for (int j = 0; j < length; ++j) {
      CHECK(p[j] == doctest::Approx(double(counts[j]) / n).epsilon(1e-12));
    }
  }
}

TEST_CASE("categorical update counts symbol frequencies per component") {
  CategoricalMatrix q = categorical_update({{1}, {1}, {2}}, 3);
  REQUIRE(q.size() == 1);
  CHECK(q[0][0] == 0.0);
  CHECK(q[0][1] == doctest::Approx(2.0 / 3));
  CHECK(q[0][2] == doctest::Approx(1.0 / 3));

  // A single sample gives one-hot rows.
  q = categorical_update({{2, 0}}, 3);
  CHECK(q[0][2] == 1.0);
  CHECK(q[1][0] == 1.0);
  CHECK_THROWS_AS(categorical_update({}, 3), std::invalid_argument);

  // Rows always sum to one.
  Rng rng(6);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 1 + rng.uniform_int(20);
    int length = 1 + rng.uniform_int(6);
    int K = 2 + rng.uniform_int(5);
    std::vector<std::vector<int>> elite(n, std::vector<int>(length));
    for (auto& sample : elite) {
      for (int j = 0; j < length; ++j) sample[j] = rng.uniform_int(K);
    }
    q = categorical_update(elite, K);
    for (const auto& row : q) {
      double sum = std::accumulate(row.begin(), row.end(), 0.0);
      CHECK(std::abs(sum - 1.0) < 1e-12);
    }
  }
}

TEST_CASE("blend is the convex combination") {
  BernoulliVector old_p = {0.5, 0.2};
  BernoulliVector new_p = {1.0, 0.0};
  CHECK(blend(old_p, new_p, 1.0) == new_p);
  BernoulliVector mixed = blend(old_p, new_p, 0.6);
  CHECK(mixed[0] == doctest::Approx(0.8));
  CHECK(mixed[1] == doctest::Approx(0.08));
  CHECK_THROWS_AS(blend(old_p, BernoulliVector{0.5}, 0.5), std::invalid_argument);

  // Blending categorical rows preserves row sums.
  CategoricalMatrix old_q = {{0.25, 0.75}};
  CategoricalMatrix new_q = {{1.0, 0.0}};
  CategoricalMatrix mixed_q = blend(old_q, new_q, 0.3);
  CHECK(mixed_q[0][0] + mixed_q[0][1] == doctest::Approx(1.0));
}

TEST_CASE("decay shrinks slot probabilities geometrically") {
  BernoulliVector p = {0.5, 1.0};
  decay_slot_probabilities(p, 0.98);
  CHECK(p[0] == doctest::Approx(0.49));
  CHECK(p[1] == doctest::Approx(0.98));
  decay_slot_probabilities(p, 1.0);
  CHECK(p[0] == doctest::Approx(0.49));
  double previous = 1.0;
  BernoulliVector q = {1.0};
  for (int i = 0; i < 100; ++i) {
    decay_slot_probabilities(q, 0.9);
    CHECK(q[0] < previous);
    previous = q[0];
  }
}

TEST_CASE("convergence detection uses the 1e-6 band") {
  CHECK(converged({0.0, 1.0}));
  CHECK(converged({1e-7, 1.0 - 1e-7}));
  CHECK(!converged({0.5}));
  CHECK(!converged({1e-3}));
}

TEST_CASE("ce log serializes one CSV row per iteration") {
  std::vector<CeIterationStats> history = {{0, 1.5, 2.0, 1.0, 5}};
  std::string csv = ce_log_csv(history);
  CHECK(csv.find("iteration,gamma,best,mean,elite_size") == 0);
  CHECK(csv.find("0,1.500000,2.000000,1.000000,5\n") != std::string::npos);
}

namespace {

struct OneMaxSetup {
  BernoulliVector p;
  CeCallbacks<std::vector<std::uint8_t>> callbacks;
};

// Standard OneMax benchmark: maximize the number of ones in a bit-vector.
CeCallbacks<std::vector<std::uint8_t>> onemax_callbacks(BernoulliVector& p, double alpha) {
  CeCallbacks<std::vector<std::uint8_t>> callbacks;
  callbacks.sample = [&p](Rng& rng) {
    std::vector<std::uint8_t> bits(p.size());
    for (std::size_t j = 0; j < p.size(); ++j) bits[j] = rng.bernoulli(p[j]) ? 1 : 0;
    return bits;
  };
  callbacks.evaluate = [](const std::vector<std::uint8_t>& bits, std::uint64_t) {
    return double(std::accumulate(bits.begin(), bits.end(), 0));
  };
  callbacks.update = [&p, alpha](const std::vector<std::vector<std::uint8_t>>& samples,
                                 const EliteSelection& elite) {
    std::vector<std::vector<std::uint8_t>> elite_bits;
    for (int index : elite.indices) elite_bits.push_back(samples[index]);
    p = blend(p, bernoulli_update(elite_bits), alpha);
  };
  return callbacks;
}

}  // namespace

TEST_CASE("ce_optimize solves OneMax and is deterministic") {
  BernoulliVector p(50, 0.5);
  auto callbacks = onemax_callbacks(p, 0.6);
  CeOptions options;
  options.population = 100;
  options.rho = 0.1;
  options.iterations = 30;
  options.seed = 7;
  CeResult<std::vector<std::uint8_t>> result = ce_optimize(callbacks, options);
  CHECK(result.best_value == 50.0);
  CHECK(result.history.size() <= 30);

  // Same seed, same history.
  BernoulliVector p2(50, 0.5);
  auto callbacks2 = onemax_callbacks(p2, 0.6);
  CeResult<std::vector<std::uint8_t>> again = ce_optimize(callbacks2, options);
  REQUIRE(again.history.size() == result.history.size());
  for (std::size_t t = 0; t < result.history.size(); ++t) {
    CHECK(again.history[t].threshold == result.history[t].threshold);
    CHECK(again.history[t].best_value == result.history[t].best_value);
    CHECK(again.history[t].mean_value == result.history[t].mean_value);
  }
  CHECK(p == p2);
}

TEST_CASE("elite mean is nondecreasing on OneMax with alpha 1") {
  BernoulliVector p(30, 0.5);
  auto callbacks = onemax_callbacks(p, 1.0);
  CeOptions options;
  options.population = 200;
  options.rho = 0.1;
  options.iterations = 15;
  options.seed = 3;
  CeResult<std::vector<std::uint8_t>> result = ce_optimize(callbacks, options);
  for (std::size_t t = 1; t < result.history.size(); ++t) {
    CHECK(result.history[t].threshold >= result.history[t - 1].threshold - 1e-9);
  }
}

TEST_CASE("degenerate loop: T=1, N=1, rho=1 blends the single sample") {
  BernoulliVector p = {0.5, 0.5, 0.5};
  auto callbacks = onemax_callbacks(p, 0.6);
  CeOptions options;
  options.population = 1;
  options.rho = 1.0;
  options.iterations = 1;
  options.seed = 9;
  CeResult<std::vector<std::uint8_t>> result = ce_optimize(callbacks, options);
  REQUIRE(result.found_any);
  for (std::size_t j = 0; j < p.size(); ++j) {
    double expected = 0.6 * result.best[j] + 0.4 * 0.5;
    CHECK(p[j] == doctest::Approx(expected));
  }
}

TEST_CASE("stop callback ends the loop early") {
  BernoulliVector p(10, 0.5);
  auto callbacks = onemax_callbacks(p, 1.0);
  int updates = 0;
  auto base_update = callbacks.update;
  callbacks.update = [&](const std::vector<std::vector<std::uint8_t>>& samples,
                         const EliteSelection& elite) {
    base_update(samples, elite);
    ++updates;
  };
  callbacks.stop = [&] { return updates >= 3; };
  CeOptions options;
  options.population = 50;
  options.rho = 0.2;
  options.iterations = 100;
  options.seed = 1;
  CeResult<std::vector<std::uint8_t>> result = ce_optimize(callbacks, options);
  CHECK(result.history.size() == 3);
}
