#pragma once

#include <algorithm>
#include <numeric>
#include <thread>

namespace pacrl {

template <class Candidate>
CeResult<Candidate> ce_optimize(const CeCallbacks<Candidate>& callbacks, const CeOptions& options) {
  if (options.iterations < 1 || options.population < 1)
    throw std::invalid_argument("ce_optimize needs population >= 1 and iterations >= 1");

  CeResult<Candidate> result;
  for (int t = 0; t < options.iterations; ++t) {
    Rng draw_rng(derive_seed(options.seed, static_cast<std::uint64_t>(t)));
    std::vector<Candidate> samples;
    samples.reserve(static_cast<std::size_t>(options.population));
    for (int i = 0; i < options.population; ++i) samples.push_back(callbacks.sample(draw_rng));

    std::vector<double> values(samples.size());
    const auto eval_range = [&](std::size_t begin, std::size_t end) {
      for (std::size_t i = begin; i < end; ++i) {
        const std::uint64_t eval_seed =
            derive_seed(derive_seed(options.seed, 0xEA11 + static_cast<std::uint64_t>(t)), i);
        values[i] = callbacks.evaluate(samples[i], eval_seed);
      }
    };
    const int threads = std::max(1, std::min<int>(options.threads, options.population));
    if (threads == 1) {
      eval_range(0, samples.size());
    } else {
      std::vector<std::thread> pool;
      const std::size_t chunk = (samples.size() + threads - 1) / threads;
      for (int w = 0; w < threads; ++w) {
        const std::size_t begin = std::min(samples.size(), w * chunk);
        const std::size_t end = std::min(samples.size(), begin + chunk);
        if (begin < end) pool.emplace_back(eval_range, begin, end);
      }
      for (auto& th : pool) th.join();
    }

    const EliteSelection elite = select_elite(values, options.rho);
    for (std::size_t i = 0; i < samples.size(); ++i) {
      if (!result.found_any || values[i] > result.best_value) {
        result.best = samples[i];
        result.best_value = values[i];
        result.found_any = true;
      }
    }
    CeIterationStats stats;
    stats.iteration = t;
    stats.threshold = elite.threshold;
    stats.best_value = *std::max_element(values.begin(), values.end());
    stats.mean_value = std::accumulate(values.begin(), values.end(), 0.0) /
                       static_cast<double>(values.size());
    stats.elite_size = static_cast<int>(elite.indices.size());
    result.history.push_back(stats);

    callbacks.update(samples, elite);
    if (callbacks.stop && callbacks.stop()) break;
  }
  return result;
}

}  // namespace pacrl
