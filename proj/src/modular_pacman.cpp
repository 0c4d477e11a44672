#include "pacrl/modular_pacman.hpp"

namespace pacrl {

namespace {

struct SharedStreams {
  Rng env_rng;
  Rng agent_rng;
  GameState current;  // state seen by the current step's observe
};

ModuleActivations activations_from(const modular::ModularState& m) {
  ModuleActivations act;
  for (int i = 0; i < kModuleCount; ++i) {
    const auto& module = m.modules[static_cast<std::size_t>(i)];
    if (module.influence > 0.5) act.priority[i] = static_cast<int>(module.value);
  }
  return act;
}

ObservationVector observations_from(const modular::ModularState& m) {
  ObservationVector obs;
  for (int i = 0; i < kObservationCount; ++i)
    obs.values[static_cast<std::size_t>(i)] = m.modules[static_cast<std::size_t>(kModuleCount + i)].value;
  return obs;
}

}  // namespace

PacmanModularSystem make_pacman_modular_system(const Maze& maze, const RulePolicy& policy,
                                               std::uint64_t seed, const GameConfig& config) {
  auto shared = std::make_shared<SharedStreams>(SharedStreams{
      Rng(derive_seed(seed, 0x0e17)), Rng(derive_seed(seed, 0xA6E7)), new_game(maze, config)});

  PacmanModularSystem system;

  system.environment.initial_state = {new_game(maze, config), 0.0, false};
  system.environment.observe = [shared](const PacmanEnvState& s, Rng&) {
    shared->current = s.game;
    return PacmanObservation{observe(s.game), s.life_lost};
  };
  system.environment.reward = [](const PacmanEnvState& s) { return s.last_points; };
  system.environment.terminal = [](const PacmanEnvState& s) {
    return s.game.status != GameStatus::Running;
  };
  system.environment.transition = [shared](const PacmanEnvState& s, const Dir& action, Rng&) {
    PacmanEnvState next{s.game, 0.0, false};
    const std::vector<TickEvent> events = tick(next.game, action, shared->env_rng);
    next.last_points = event_points(events);
    for (const auto& e : events)
      if (e.kind == TickEvent::Kind::LifeLost) next.life_lost = true;
    return next;
  };

  modular::ModularState initial;
  initial.modules.resize(kModularPacmanSize);
  for (int i = kModuleCount; i < kModularPacmanSize; ++i) initial.modules[i].influence = 1.0;
  system.agent.initial_modules = initial;

  system.agent.input_interface = [](const PacmanObservation& o, modular::ModularState m) {
    if (o.life_lost)
      for (int i = 0; i < kModuleCount; ++i) m.modules[i] = {0.0, 0.0};
    for (int i = 0; i < kObservationCount; ++i)
      m.modules[kModuleCount + i].value = o.vec.values[static_cast<std::size_t>(i)];
    return m;
  };
  system.agent.policy = [policy](const modular::ModularState& m, Rng&) -> modular::Delta {
    const auto decision = decide(policy, observations_from(m), activations_from(m));
    if (!decision) return {};
    const int index = static_cast<int>(decision->effect.module);
    if (decision->effect.switch_on)
      return {{index, 1.0, static_cast<double>(decision->priority)}};
    return {{index, 0.0, 0.0}};
  };
  system.agent.internal_dynamics = [](modular::ModularState m, const modular::Delta& delta) {
    return modular::apply_delta(std::move(m), delta);
  };
  system.agent.output_interface = [shared](const modular::ModularState& m, Rng&) {
    return arbitrate(activations_from(m), shared->current, shared->agent_rng);
  };

  return system;
}

}  // namespace pacrl
