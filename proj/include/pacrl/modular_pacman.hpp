#pragma once

// Instantiation of the modular-agent framework for the Pac-Man stack:
// modules 0..9 mirror the action modules (influence = on/off, value =
// priority), modules 10..18 carry the nine observations.

#include <memory>

#include "pacrl/game.hpp"
#include "pacrl/modular.hpp"
#include "pacrl/policy.hpp"

namespace pacrl {

struct PacmanEnvState {
  GameState game;
  double last_points = 0.0;   // points gained by the tick that produced this state
  bool life_lost = false;
};

struct PacmanObservation {
  ObservationVector vec;
  bool life_lost = false;
};

inline constexpr int kModularPacmanSize = kModuleCount + kObservationCount;

struct PacmanModularSystem {
  modular::Environment<PacmanEnvState, PacmanObservation, Dir> environment;
  modular::Agent<PacmanObservation, Dir> agent;
};

// Both halves derive their random streams from `seed` exactly the way
// play_episode and PolicyController do, so the interaction loop replays a
// direct episode bit for bit.
PacmanModularSystem make_pacman_modular_system(const Maze& maze, const RulePolicy& policy,
                                               std::uint64_t seed, const GameConfig& config = {});

}  // namespace pacrl
