#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "pacrl/game.hpp"
#include "pacrl/maze.hpp"
#include "pacrl/policy.hpp"
#include "pacrl/trace.hpp"

namespace pacrl {

// Glyphs: '#' wall, '.' dot, 'o' power dot, 'C' pacman, 'M' ghost,
// 'm' edible ghost, ' ' empty corridor.
struct RenderFrame {
  std::vector<std::string> grid;
  std::string status;
};

RenderFrame render(const GameState& state);
std::string frame_text(const RenderFrame& frame);

// Interactive keyboard game. Throws std::runtime_error when stdin/stdout is
// not a terminal. Arrow keys / WASD steer (last key before a tick wins),
// 'q' quits early. Returns the full trace for saving/replaying.
Trace human_play_session(const Maze& maze, const std::string& maze_text,
                         std::uint64_t seed, double tick_rate,
                         long tick_limit, const GameConfig& config = {});

// Simulates a policy game and renders it live at tick_rate frames/second.
Trace watch_policy(const Maze& maze, const std::string& maze_text,
                   const RulePolicy& policy, std::uint64_t seed,
                   double tick_rate, long tick_limit,
                   const GameConfig& config = {});

// Frame-by-frame playback of a recorded trace to `out`.
//   speed > 0: frames per second;
//   speed = 0: one tick per keypress (terminal required);
//   speed < 0: dump all frames without delay (non-interactive).
void replay_trace(const Trace& trace, double speed, std::ostream& out);

}  // namespace pacrl
