#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "pacrl/game.hpp"
#include "pacrl/perception.hpp"
#include "pacrl/rng.hpp"

namespace pacrl {

// The ten switchable action modules, in fixed arbitration order.
enum class ModuleId : int {
  ToDot = 0,
  ToPowerDot,
  FromPowerDot,
  ToEdGhost,
  FromGhost,
  ToSafeJunction,
  FromGhostCenter,
  KeepDirection,
  ToLowerGhostDensity,
  ToGhostFreeArea,
};

inline constexpr int kModuleCount = 10;

const char* module_name(ModuleId id);
std::optional<ModuleId> module_from_name(std::string_view name);

// On/off state per module; an on module remembers the priority (1..3) of
// the rule that switched it on.
struct ModuleActivations {
  std::array<int, kModuleCount> priority{};  // 0 = off

  bool on(ModuleId id) const { return priority[static_cast<int>(id)] != 0; }
  int priority_of(ModuleId id) const { return priority[static_cast<int>(id)]; }
  void switch_on(ModuleId id, int prio) { priority[static_cast<int>(id)] = prio; }
  void switch_off(ModuleId id) { priority[static_cast<int>(id)] = 0; }
  void clear() { priority.fill(0); }
  bool operator==(const ModuleActivations&) const = default;
};

// The nonempty subset of `candidates` the module votes for.
std::vector<Dir> preferred_directions(ModuleId module, const GameState& state,
                                      const Perception& perception,
                                      const std::vector<Dir>& candidates);

std::vector<Dir> preferred_directions(ModuleId module, const GameState& state,
                                      const std::vector<Dir>& candidates);

// Priority cascade: candidates are narrowed by each switched-on module in
// priority order (module order within a level), then a uniform draw breaks
// whatever tie remains.
Dir arbitrate(const ModuleActivations& activations, const GameState& state,
              const Perception& perception, Rng& rng);

Dir arbitrate(const ModuleActivations& activations, const GameState& state, Rng& rng);

}  // namespace pacrl
