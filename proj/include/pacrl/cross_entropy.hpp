#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pacrl/rng.hpp"

namespace pacrl {

using BernoulliVector = std::vector<double>;
using CategoricalMatrix = std::vector<std::vector<double>>;

struct EliteSelection {
  double threshold = 0.0;          // value of the ceil(rho*N)-th best sample
  std::vector<int> indices;        // all samples with value >= threshold
};

// Level-set elite: threshold is the ceil(rho*N)-th largest value, the elite
// is every sample at or above it (ties may enlarge it past rho*N).
EliteSelection select_elite(const std::vector<double>& values, double rho);

// Componentwise frequency of 1s in the elite.
BernoulliVector bernoulli_update(const std::vector<std::vector<std::uint8_t>>& elite_bits);

// Per-component symbol frequencies; rows sum to 1 by construction.
// Symbols are 0-based, K is the alphabet size.
CategoricalMatrix categorical_update(const std::vector<std::vector<int>>& elite_symbols, int K);

BernoulliVector blend(const BernoulliVector& old_params, const BernoulliVector& new_params,
                      double alpha);
CategoricalMatrix blend(const CategoricalMatrix& old_params, const CategoricalMatrix& new_params,
                        double alpha);

void decay_slot_probabilities(BernoulliVector& p, double beta);

inline constexpr double kConvergenceTolerance = 1e-6;

// True when every probability is within kConvergenceTolerance of 0 or 1.
bool converged(const BernoulliVector& p);

struct CeIterationStats {
  int iteration = 0;
  double threshold = 0.0;
  double best_value = 0.0;
  double mean_value = 0.0;
  int elite_size = 0;
};

std::string ce_log_csv(const std::vector<CeIterationStats>& history);

struct CeOptions {
  int population = 100;   // N
  double rho = 0.1;
  int iterations = 30;    // T
  std::uint64_t seed = 0;
  int threads = 1;        // parallelism for the N evaluations
};

template <class Candidate>
struct CeResult {
  Candidate best;
  double best_value = 0.0;
  bool found_any = false;
  std::vector<CeIterationStats> history;
};

// Generic CE loop: draw N / evaluate / select elite / hand the elite to the
// caller's update (which owns the distribution parameters, including
// blending and decay). `stop` may end the loop early, e.g. on convergence.
template <class Candidate>
struct CeCallbacks {
  std::function<Candidate(Rng&)> sample;
  std::function<double(const Candidate&, std::uint64_t eval_seed)> evaluate;
  std::function<void(const std::vector<Candidate>&, const EliteSelection&)> update;
  std::function<bool()> stop;  // optional
};

template <class Candidate>
CeResult<Candidate> ce_optimize(const CeCallbacks<Candidate>& callbacks, const CeOptions& options);

}  // namespace pacrl

#include "pacrl/cross_entropy_impl.hpp"
