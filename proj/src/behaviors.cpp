#include "pacrl/behaviors.hpp"

#include <algorithm>
#include <cmath>

namespace pacrl {

const char* module_name(ModuleId id) {
  switch (id) {
    case ModuleId::ToDot: return "ToDot";
    case ModuleId::ToPowerDot: return "ToPowerDot";
    case ModuleId::FromPowerDot: return "FromPowerDot";
    case ModuleId::ToEdGhost: return "ToEdGhost";
    case ModuleId::FromGhost: return "FromGhost";
    case ModuleId::ToSafeJunction: return "ToSafeJunction";
    case ModuleId::FromGhostCenter: return "FromGhostCenter";
    case ModuleId::KeepDirection: return "KeepDirection";
    case ModuleId::ToLowerGhostDensity: return "ToLowerGhostDensity";
    case ModuleId::ToGhostFreeArea: return "ToGhostFreeArea";
  }
  return "?";
}

std::optional<ModuleId> module_from_name(std::string_view name) {
  for (int i = 0; i < kModuleCount; ++i) {
    const ModuleId id = static_cast<ModuleId>(i);
    if (name == module_name(id)) return id;
  }
  return std::nullopt;
}

namespace {

// argmin/argmax of a per-candidate score, keeping ties.
template <class Score>
std::vector<Dir> arg_best(const std::vector<Dir>& candidates, bool maximize, Score score) {
  std::vector<Dir> best;
  double best_value = 0.0;
  for (Dir d : candidates) {
    const double v = score(d);
    if (best.empty() || (maximize ? v > best_value : v < best_value)) {
      best.assign(1, d);
      best_value = v;
    } else if (v == best_value) {
      best.push_back(d);
    }
  }
  return best;
}

std::vector<Dir> toward_field(const GameState& state, const DistanceField& field, bool away,
                              const std::vector<Dir>& candidates) {
  // No object of the class anywhere: every candidate is equally good.
  bool any = false;
  for (int d : field.dist)
    if (d != DistanceField::kUnreachable) {
      any = true;
      break;
    }
  if (!any) return candidates;
  return arg_best(candidates, away, [&](Dir d) {
    return static_cast<double>(field.at(step(state.pacman, d)));
  });
}

double ghost_density_from_fields(const Perception& p, Cell c) {
  double density = 0.0;
  for (const auto& field : p.from_each_ghost) {
    if (!field) continue;
    const int d = field->at(c);
    if (d < 10) density += (10.0 - d) / 10.0;
  }
  return density;
}

}  // namespace

std::vector<Dir> preferred_directions(ModuleId module, const GameState& state,
                                      const Perception& p, const std::vector<Dir>& candidates) {
  switch (module) {
    case ModuleId::ToDot:
      return toward_field(state, p.from_dots, false, candidates);
    case ModuleId::ToPowerDot:
      return toward_field(state, p.from_power_dots, false, candidates);
    case ModuleId::FromPowerDot:
      return toward_field(state, p.from_power_dots, true, candidates);
    case ModuleId::ToEdGhost:
      return toward_field(state, p.from_edible_ghosts, false, candidates);
    case ModuleId::FromGhost:
      return toward_field(state, p.from_threat_ghosts, true, candidates);
    case ModuleId::ToSafeJunction:
      return arg_best(candidates, true,
                      [&](Dir d) { return p.junction_safety[static_cast<int>(d)]; });
    case ModuleId::FromGhostCenter: {
      if (!p.ghost_center) return candidates;
      return arg_best(candidates, true, [&](Dir d) {
        const Cell c = step(state.pacman, d);
        const double dx = c.x - p.ghost_center->first;
        const double dy = c.y - p.ghost_center->second;
        return dx * dx + dy * dy;
      });
    }
    case ModuleId::KeepDirection: {
      for (Dir want : {state.pacman_dir, right_of(state.pacman_dir), left_of(state.pacman_dir)})
        if (std::find(candidates.begin(), candidates.end(), want) != candidates.end())
          return {want};
      return candidates;
    }
    case ModuleId::ToLowerGhostDensity:
      return arg_best(candidates, false, [&](Dir d) {
        return ghost_density_from_fields(p, step(state.pacman, d));
      });
    case ModuleId::ToGhostFreeArea: {
      bool any_ghost = false;
      for (int d : p.from_active_ghosts.dist)
        if (d != DistanceField::kUnreachable) {
          any_ghost = true;
          break;
        }
      if (!any_ghost) return candidates;
      // Target: walkable cell whose minimum ghost distance is largest,
      // ties broken by smallest cell index.
      const Maze& maze = *state.maze;
      int target = -1;
      int target_dist = -1;
      for (int i = 0; i < maze.size(); ++i) {
        if (!maze.walkable(maze.cell(i))) continue;
        const int d = p.from_active_ghosts.dist[i];
        if (d != DistanceField::kUnreachable && d > target_dist) {
          target_dist = d;
          target = i;
        }
      }
      const Cell target_cell[1] = {maze.cell(target)};
      const DistanceField to_target = distance_field(maze, target_cell);
      return arg_best(candidates, false, [&](Dir d) {
        return static_cast<double>(to_target.at(step(state.pacman, d)));
      });
    }
  }
  return candidates;
}

std::vector<Dir> preferred_directions(ModuleId module, const GameState& state,
                                      const std::vector<Dir>& candidates) {
  return preferred_directions(module, state, perceive(state), candidates);
}

Dir arbitrate(const ModuleActivations& activations, const GameState& state, const Perception& p,
              Rng& rng) {
  std::vector<Dir> candidates = legal_directions(state, -1);
  for (int level = 1; level <= 3 && candidates.size() > 1; ++level) {
    for (int m = 0; m < kModuleCount && candidates.size() > 1; ++m) {
      const ModuleId id = static_cast<ModuleId>(m);
      if (activations.priority_of(id) != level) continue;
      candidates = preferred_directions(id, state, p, candidates);
    }
  }
  if (candidates.size() == 1) return candidates[0];
  return candidates[rng.uniform_int(static_cast<int>(candidates.size()))];
}

Dir arbitrate(const ModuleActivations& activations, const GameState& state, Rng& rng) {
  return arbitrate(activations, state, perceive(state), rng);
}

}  // namespace pacrl
