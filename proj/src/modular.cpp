#include "pacrl/modular.hpp"

#include <numeric>

namespace pacrl::modular {

double discounted_return(const std::vector<double>& rewards, double discount) {
  double sum = 0.0;
  double weight = 1.0;
  for (double r : rewards) {
    sum += weight * r;
    weight *= discount;
  }
  return sum;
}

Delta evaluate_decision_queue(const std::vector<QueueRule>& rules, const ModularState& state,
                              Rng& rng) {
  std::vector<std::size_t> order(rules.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return rules[a].priority < rules[b].priority; });
  for (std::size_t i : order) {
    if (rules[i].condition(state)) return rules[i].atomic_policy(state, rng);
  }
  return {};
}

}  // namespace pacrl::modular
