#pragma once

// Generic modular-agent framework: agents are described by a vector of
// (influence, value) modules, policies propose influence changes, and a
// fixed interaction loop couples agent and environment.

#include <algorithm>
#include <functional>
#include <optional>
#include <vector>

#include "pacrl/rng.hpp"

namespace pacrl::modular {

struct Module {
  double influence = 0.0;  // 0/1 when used as a switch
  double value = 0.0;
  bool operator==(const Module&) const = default;
};

struct ModularState {
  std::vector<Module> modules;
  bool operator==(const ModularState&) const = default;
};

// Explicit "set module i" instruction; a delta is a list of them, so the
// internal dynamics can veto or adjust each assignment locally.
struct ModuleAssignment {
  int index = 0;
  double influence = 0.0;
  double value = 0.0;
  bool operator==(const ModuleAssignment&) const = default;
};

using Delta = std::vector<ModuleAssignment>;

inline ModularState apply_delta(ModularState state, const Delta& delta) {
  for (const ModuleAssignment& a : delta) {
    state.modules[static_cast<std::size_t>(a.index)].influence = a.influence;
    state.modules[static_cast<std::size_t>(a.index)].value = a.value;
  }
  return state;
}

template <class State, class Obs, class Action>
struct Environment {
  State initial_state;
  std::function<Obs(const State&, Rng&)> observe;
  std::function<double(const State&)> reward;
  std::function<State(const State&, const Action&, Rng&)> transition;
  std::function<bool(const State&)> terminal;  // optional; empty = never
};

template <class Obs, class Action>
struct Agent {
  ModularState initial_modules;
  std::function<ModularState(const Obs&, ModularState)> input_interface;            // phi
  std::function<Delta(const ModularState&, Rng&)> policy;                           // pi
  std::function<ModularState(ModularState, const Delta&)> internal_dynamics;        // delta
  std::function<Action(const ModularState&, Rng&)> output_interface;                // psi
};

template <class Obs, class Action>
struct StepRecord {
  Obs observation;
  double reward = 0.0;
  Delta delta;
  Action action;
};

template <class Obs, class Action>
struct LoopResult {
  std::vector<StepRecord<Obs, Action>> trace;
  double discounted_return = 0.0;
};

double discounted_return(const std::vector<double>& rewards, double discount);

// One step: observe, reward, input interface, policy, internal dynamics,
// output interface, environment transition — in exactly that order.
template <class State, class Obs, class Action>
LoopResult<Obs, Action> run_interaction_loop(const Environment<State, Obs, Action>& env,
                                             const Agent<Obs, Action>& agent, long horizon,
                                             double discount, Rng& rng) {
  LoopResult<Obs, Action> result;
  State state = env.initial_state;
  ModularState modules = agent.initial_modules;
  std::vector<double> rewards;
  for (long t = 0; t < horizon; ++t) {
    if (env.terminal && env.terminal(state)) break;
    StepRecord<Obs, Action> record;
    record.observation = env.observe(state, rng);
    record.reward = env.reward(state);
    rewards.push_back(record.reward);
    ModularState after_input = agent.input_interface(record.observation, std::move(modules));
    record.delta = agent.policy(after_input, rng);
    modules = agent.internal_dynamics(std::move(after_input), record.delta);
    record.action = agent.output_interface(modules, rng);
    state = env.transition(state, record.action, rng);
    result.trace.push_back(std::move(record));
  }
  result.discounted_return = discounted_return(rewards, discount);
  return result;
}

// Decision queue: rules scanned in ascending priority number, insertion
// order within a level; the first rule whose condition holds supplies the
// delta, otherwise the delta is a no-op.
struct QueueRule {
  int priority = 1;
  std::function<bool(const ModularState&)> condition;
  std::function<Delta(const ModularState&, Rng&)> atomic_policy;
};

Delta evaluate_decision_queue(const std::vector<QueueRule>& rules, const ModularState& state,
                              Rng& rng);

}  // namespace pacrl::modular
