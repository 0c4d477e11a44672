#include "pacrl/cross_entropy.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace pacrl {

EliteSelection select_elite(const std::vector<double>& values, double rho) {
  if (values.empty()) throw std::invalid_argument("select_elite: empty population");
  if (rho <= 0.0 || rho > 1.0) throw std::invalid_argument("select_elite: rho must be in (0,1]");
  const int n = static_cast<int>(values.size());
  const int elite_count = std::max(1, static_cast<int>(std::ceil(rho * n)));

  std::vector<double> sorted = values;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  EliteSelection out;
  out.threshold = sorted[elite_count - 1];
  for (int i = 0; i < n; ++i)
    if (values[i] >= out.threshold) out.indices.push_back(i);
  return out;
}

BernoulliVector bernoulli_update(const std::vector<std::vector<std::uint8_t>>& elite_bits) {
  if (elite_bits.empty()) throw std::invalid_argument("bernoulli_update: empty elite");
  const std::size_t m = elite_bits.front().size();
  BernoulliVector p(m, 0.0);
  for (const auto& sample : elite_bits) {
    if (sample.size() != m) throw std::invalid_argument("bernoulli_update: ragged elite");
    for (std::size_t j = 0; j < m; ++j)
      if (sample[j]) p[j] += 1.0;
  }
  for (double& v : p) v /= static_cast<double>(elite_bits.size());
  return p;
}

CategoricalMatrix categorical_update(const std::vector<std::vector<int>>& elite_symbols, int K) {
  if (elite_symbols.empty()) throw std::invalid_argument("categorical_update: empty elite");
  if (K < 1) throw std::invalid_argument("categorical_update: K must be >= 1");
  const std::size_t m = elite_symbols.front().size();
  CategoricalMatrix q(m, std::vector<double>(static_cast<std::size_t>(K), 0.0));
  for (const auto& sample : elite_symbols) {
    if (sample.size() != m) throw std::invalid_argument("categorical_update: ragged elite");
    for (std::size_t j = 0; j < m; ++j) {
      if (sample[j] < 0 || sample[j] >= K)
        throw std::invalid_argument("categorical_update: symbol out of range");
      q[j][static_cast<std::size_t>(sample[j])] += 1.0;
    }
  }
  for (auto& row : q)
    for (double& v : row) v /= static_cast<double>(elite_symbols.size());
  return q;
}

BernoulliVector blend(const BernoulliVector& old_params, const BernoulliVector& new_params,
                      double alpha) {
  if (old_params.size() != new_params.size())
    throw std::invalid_argument("blend: shape mismatch");
  BernoulliVector out(old_params.size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = alpha * new_params[i] + (1.0 - alpha) * old_params[i];
  return out;
}

CategoricalMatrix blend(const CategoricalMatrix& old_params, const CategoricalMatrix& new_params,
                        double alpha) {
  if (old_params.size() != new_params.size())
    throw std::invalid_argument("blend: shape mismatch");
  CategoricalMatrix out(old_params.size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = blend(old_params[i], new_params[i], alpha);
  return out;
}

void decay_slot_probabilities(BernoulliVector& p, double beta) {
  for (double& v : p) v *= beta;
}

bool converged(const BernoulliVector& p) {
  for (double v : p)
    if (v > kConvergenceTolerance && v < 1.0 - kConvergenceTolerance) return false;
  return true;
}

std::string ce_log_csv(const std::vector<CeIterationStats>& history) {
  std::string out = "iteration,gamma,best,mean,elite_size\n";
  char line[160];
  for (const auto& s : history) {
    std::snprintf(line, sizeof(line), "%d,%.6f,%.6f,%.6f,%d\n", s.iteration, s.threshold,
                  s.best_value, s.mean_value, s.elite_size);
    out += line;
  }
  return out;
}

}  // namespace pacrl
