#pragma once

#include <array>
#include <limits>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "pacrl/game.hpp"
#include "pacrl/maze.hpp"

namespace pacrl {

// Finite sentinel for "no such object"; compares greater than any
// threshold appearing in rule conditions (the ">99" idiom).
inline constexpr double kInfiniteObservation = 999.0;

// Exact BFS step distances from a source set over the corridor graph.
struct DistanceField {
  static constexpr int kUnreachable = std::numeric_limits<int>::max() / 4;

  int width = 0;
  std::vector<int> dist;

  int at(Cell c) const { return dist[c.y * width + c.x]; }
  bool reachable(Cell c) const { return at(c) != kUnreachable; }
};

DistanceField distance_field(const Maze& maze, std::span<const Cell> sources);

enum class ObsId : int {
  Constant = 0,
  NearestDot,
  NearestPowerDot,
  NearestGhost,
  NearestEdGhost,
  MaxJunctionSafety,
  GhostCenterDist,
  DotCenterDist,
  GhostDensity,
};

inline constexpr int kObservationCount = 9;

const char* obs_name(ObsId id);
std::optional<ObsId> obs_from_name(std::string_view name);

struct ObservationVector {
  std::array<double, kObservationCount> values{};
  double operator[](ObsId id) const { return values[static_cast<int>(id)]; }
  double& operator[](ObsId id) { return values[static_cast<int>(id)]; }
};

// Everything the observation and behaviour layers need for one tick,
// computed in one pass so they all see consistent distances.
struct Perception {
  DistanceField from_pacman;
  DistanceField from_dots;
  DistanceField from_power_dots;
  DistanceField from_threat_ghosts;   // active, non-edible
  DistanceField from_edible_ghosts;   // active, edible
  DistanceField from_active_ghosts;   // active, any
  std::array<std::optional<DistanceField>, kGhostCount> from_each_ghost;
  std::array<double, 4> junction_safety{};  // indexed by Dir
  std::optional<std::pair<double, double>> ghost_center;
  std::optional<std::pair<double, double>> dot_center;
  ObservationVector obs;
};

Perception perceive(const GameState& state);

// Per-direction junction safety: k - n where n is pacman's distance to the
// nearest junction in that direction and k the nearest threat ghost's
// distance to it. Walls / no junction give -kInfiniteObservation, no
// threat ghosts +kInfiniteObservation.
std::array<double, 4> junction_safety_per_direction(const GameState& state);

// Sum over active ghosts of max(0, (10 - d) / 10).
double ghost_density_at(const GameState& state, Cell cell);

ObservationVector observe(const GameState& state);

}  // namespace pacrl
