#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "pacrl/maze.hpp"
#include "pacrl/rng.hpp"

namespace pacrl {

struct GameConfig {
  int edible_ticks = 80;      // power-dot blue period
  int pen_delay = 10;         // ticks before a penned ghost is released
  int extra_life_score = 10000;
};

struct GhostState {
  Cell pos;
  Dir dir = Dir::North;
  bool edible = false;
  bool in_pen = true;
  int pen_timer = 0;
};

enum class GameStatus { Running, Cleared, GameOver };

struct TickEvent {
  enum class Kind { DotEaten, PowerDotEaten, GhostEaten, LifeLost, ExtraLife, LevelCleared };
  Kind kind;
  int points = 0;
  int ghost = -1;
};

inline constexpr int kGhostCount = 4;

struct GameState {
  const Maze* maze = nullptr;
  GameConfig config;
  std::vector<std::uint8_t> dots;        // remaining dots, per cell
  std::vector<std::uint8_t> power_dots;  // remaining power dots, per cell
  int dots_left = 0;
  int power_dots_left = 0;
  Cell pacman;
  Dir pacman_dir = Dir::East;
  std::array<GhostState, kGhostCount> ghosts;
  int score = 0;
  int lives = 3;
  int edible_timer = 0;
  int ghost_chain_value = 200;  // points for the next ghost eaten
  long tick_index = 0;
  bool extra_life_granted = false;
  GameStatus status = GameStatus::Running;

  bool has_dot(Cell c) const { return dots[maze->index(c)] != 0; }
  bool has_power_dot(Cell c) const { return power_dots[maze->index(c)] != 0; }
  bool ghost_active(int i) const { return !ghosts[i].in_pen; }
};

GameState new_game(const Maze& maze, const GameConfig& config = {});

// Legal moves for pacman (mover = -1) or ghost index 0..3. Ghosts may not
// reverse unless the reverse is the only open direction.
std::vector<Dir> legal_directions(const GameState& state, int mover);

struct GhostDecision {
  Dir dir;
  bool random_branch = false;  // true when the 20% uniform branch was taken
};

// With probability 0.2 a uniform legal direction, otherwise the greedy
// shortest-path step towards pacman (away from pacman when edible).
GhostDecision ghost_decide(const GameState& state, int ghost, Rng& rng);

std::vector<TickEvent> tick(GameState& state, Dir pacman_direction, Rng& rng);

inline int event_points(const std::vector<TickEvent>& events) {
  int sum = 0;
  for (const auto& e : events) sum += e.points;
  return sum;
}

// Per-tick trace record, written after the tick resolved.
struct TickRecord {
  long tick = 0;
  Cell pacman;
  Dir pacman_dir = Dir::East;
  std::array<GhostState, kGhostCount> ghosts;
  std::vector<TickEvent> events;
  int score = 0;
  int lives = 0;
};

struct EpisodeResult {
  int final_score = 0;
  long ticks = 0;
  GameStatus status = GameStatus::Running;
  std::vector<TickRecord> trace;
};

// Per-tick direction chooser. on_life_lost lets stateful controllers reset.
class Controller {
 public:
  virtual ~Controller() = default;
  virtual Dir choose(const GameState& state) = 0;
  virtual void on_life_lost(const GameState& /*state*/) {}
};

EpisodeResult play_episode(const Maze& maze, Controller& controller, std::uint64_t seed,
                           long tick_limit, const GameConfig& config = {});

}  // namespace pacrl
