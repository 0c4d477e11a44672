#include "pacrl/perception.hpp"

#include <algorithm>
#include <cmath>

namespace pacrl {

const char* obs_name(ObsId id) {
  switch (id) {
    case ObsId::Constant: return "Constant";
    case ObsId::NearestDot: return "NearestDot";
    case ObsId::NearestPowerDot: return "NearestPowerDot";
    case ObsId::NearestGhost: return "NearestGhost";
    case ObsId::NearestEdGhost: return "NearestEdGhost";
    case ObsId::MaxJunctionSafety: return "MaxJunctionSafety";
    case ObsId::GhostCenterDist: return "GhostCenterDist";
    case ObsId::DotCenterDist: return "DotCenterDist";
    case ObsId::GhostDensity: return "GhostDensity";
  }
  return "?";
}

std::optional<ObsId> obs_from_name(std::string_view name) {
  for (int i = 0; i < kObservationCount; ++i) {
    const ObsId id = static_cast<ObsId>(i);
    if (name == obs_name(id)) return id;
  }
  // The sample policy in the literature abbreviates MaxJunctionSafety.
  if (name == "JunctionSafety") return ObsId::MaxJunctionSafety;
  return std::nullopt;
}

DistanceField distance_field(const Maze& maze, std::span<const Cell> sources) {
  DistanceField field;
  field.width = maze.width();
  field.dist.assign(static_cast<std::size_t>(maze.size()), DistanceField::kUnreachable);
  std::vector<int> queue;
  queue.reserve(static_cast<std::size_t>(maze.walkable_count()));
  for (const Cell& c : sources) {
    const int idx = maze.index(c);
    if (field.dist[idx] == DistanceField::kUnreachable) {
      field.dist[idx] = 0;
      queue.push_back(idx);
    }
  }
  const int w = maze.width();
  const std::array<int, 4> offsets = {-w, 1, w, -1};  // N,E,S,W
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int idx = queue[head];
    const Cell c = maze.cell(idx);
    const int d = field.dist[idx] + 1;
    for (int k = 0; k < 4; ++k) {
      const Cell n = step(c, static_cast<Dir>(k));
      if (!maze.walkable(n)) continue;
      const int nidx = idx + offsets[k];
      if (field.dist[nidx] > d) {
        field.dist[nidx] = d;
        queue.push_back(nidx);
      }
    }
  }
  return field;
}

namespace {

double nearest_from(const DistanceField& field, const Maze& maze,
                    const std::vector<std::uint8_t>& cells) {
  int best = DistanceField::kUnreachable;
  for (int i = 0; i < maze.size(); ++i)
    if (cells[i]) best = std::min(best, field.dist[i]);
  return best == DistanceField::kUnreachable ? kInfiniteObservation : best;
}

std::vector<Cell> marked_cells(const Maze& maze, const std::vector<std::uint8_t>& mask) {
  std::vector<Cell> out;
  for (int i = 0; i < maze.size(); ++i)
    if (mask[i]) out.push_back(maze.cell(i));
  return out;
}

double euclid(std::pair<double, double> center, Cell c) {
  const double dx = c.x - center.first;
  const double dy = c.y - center.second;
  return std::sqrt(dx * dx + dy * dy);
}

// BFS from the neighbour cell in direction d, never entering pacman's own
// cell, stopping at the nearest junction.
std::optional<int> nearest_junction_distance(const GameState& state, Dir d, Cell* junction_out) {
  const Maze& maze = *state.maze;
  const Cell start = step(state.pacman, d);
  if (!maze.walkable(start)) return std::nullopt;
  std::vector<int> dist(static_cast<std::size_t>(maze.size()), -1);
  std::vector<int> queue;
  dist[maze.index(start)] = 0;
  queue.push_back(maze.index(start));
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int idx = queue[head];
    const Cell c = maze.cell(idx);
    if (maze.is_junction(c)) {
      if (junction_out) *junction_out = c;
      return dist[idx];
    }
    for (Dir nd : kAllDirs) {
      const Cell n = step(c, nd);
      if (!maze.walkable(n) || n == state.pacman) continue;
      const int nidx = maze.index(n);
      if (dist[nidx] < 0) {
        dist[nidx] = dist[idx] + 1;
        queue.push_back(nidx);
      }
    }
  }
  return std::nullopt;
}

}  // namespace

Perception perceive(const GameState& state) {
  const Maze& maze = *state.maze;
  Perception p;

  const Cell pac[1] = {state.pacman};
  p.from_pacman = distance_field(maze, pac);
  p.from_dots = distance_field(maze, marked_cells(maze, state.dots));
  p.from_power_dots = distance_field(maze, marked_cells(maze, state.power_dots));

  std::vector<Cell> threat, edible, active;
  for (int i = 0; i < kGhostCount; ++i) {
    if (!state.ghost_active(i)) continue;
    const Cell c = state.ghosts[i].pos;
    active.push_back(c);
    if (state.ghosts[i].edible)
      edible.push_back(c);
    else
      threat.push_back(c);
    const Cell one[1] = {c};
    p.from_each_ghost[i] = distance_field(maze, one);
  }
  p.from_threat_ghosts = distance_field(maze, threat);
  p.from_edible_ghosts = distance_field(maze, edible);
  p.from_active_ghosts = distance_field(maze, active);

  if (!active.empty()) {
    double sx = 0, sy = 0;
    for (const Cell& c : active) {
      sx += c.x;
      sy += c.y;
    }
    p.ghost_center = {sx / active.size(), sy / active.size()};
  }
  if (state.dots_left > 0) {
    double sx = 0, sy = 0;
    for (int i = 0; i < maze.size(); ++i) {
      if (state.dots[i]) {
        const Cell c = maze.cell(i);
        sx += c.x;
        sy += c.y;
      }
    }
    p.dot_center = {sx / state.dots_left, sy / state.dots_left};
  }

  for (Dir d : kAllDirs) {
    Cell junction;
    const auto steps = nearest_junction_distance(state, d, &junction);
    double safety;
    if (!steps) {
      safety = -kInfiniteObservation;
    } else {
      const int n = 1 + *steps;
      const int k = p.from_threat_ghosts.at(junction);
      safety = k == DistanceField::kUnreachable
                   ? kInfiniteObservation
                   : std::clamp<double>(k - n, -kInfiniteObservation, kInfiniteObservation);
    }
    p.junction_safety[static_cast<int>(d)] = safety;
  }

  double density = 0.0;
  for (int i = 0; i < kGhostCount; ++i) {
    if (!p.from_each_ghost[i]) continue;
    const int d = p.from_each_ghost[i]->at(state.pacman);
    if (d < 10) density += (10.0 - d) / 10.0;
  }

  ObservationVector& o = p.obs;
  o[ObsId::Constant] = 1.0;
  o[ObsId::NearestDot] = nearest_from(p.from_pacman, maze, state.dots);
  o[ObsId::NearestPowerDot] = nearest_from(p.from_pacman, maze, state.power_dots);
  o[ObsId::NearestGhost] =
      threat.empty() ? kInfiniteObservation : p.from_threat_ghosts.at(state.pacman);
  o[ObsId::NearestEdGhost] =
      edible.empty() ? kInfiniteObservation : p.from_edible_ghosts.at(state.pacman);
  o[ObsId::MaxJunctionSafety] =
      *std::max_element(p.junction_safety.begin(), p.junction_safety.end());
  o[ObsId::GhostCenterDist] =
      p.ghost_center ? euclid(*p.ghost_center, state.pacman) : kInfiniteObservation;
  o[ObsId::DotCenterDist] = p.dot_center ? euclid(*p.dot_center, state.pacman) : 0.0;
  o[ObsId::GhostDensity] = density;
  return p;
}

std::array<double, 4> junction_safety_per_direction(const GameState& state) {
  return perceive(state).junction_safety;
}

double ghost_density_at(const GameState& state, Cell cell) {
  double density = 0.0;
  for (int i = 0; i < kGhostCount; ++i) {
    if (!state.ghost_active(i)) continue;
    const Cell one[1] = {state.ghosts[i].pos};
    const DistanceField field = distance_field(*state.maze, one);
    const int d = field.at(cell);
    if (d < 10) density += (10.0 - d) / 10.0;
  }
  return density;
}

ObservationVector observe(const GameState& state) { return perceive(state).obs; }

}  // namespace pacrl
