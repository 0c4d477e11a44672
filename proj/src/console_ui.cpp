#include "pacrl/console_ui.hpp"

#include <sys/select.h>
#include <termios.h>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace pacrl {

RenderFrame render(const GameState& state) {
  const Maze& maze = *state.maze;
  RenderFrame frame;
  frame.grid.resize(maze.height(), std::string(maze.width(), '#'));
  for (int y = 0; y < maze.height(); ++y) {
    for (int x = 0; x < maze.width(); ++x) {
      Cell c{x, y};
      if (!maze.walkable(c)) continue;
      char glyph = ' ';
      if (state.has_dot(c)) glyph = '.';
      if (state.has_power_dot(c)) glyph = 'o';
      frame.grid[y][x] = glyph;
    }
  }
  for (const GhostState& ghost : state.ghosts) {
    frame.grid[ghost.pos.y][ghost.pos.x] = ghost.edible ? 'm' : 'M';
  }
  frame.grid[state.pacman.y][state.pacman.x] = 'C';

  std::ostringstream status;
  status << "score " << state.score << "  lives " << state.lives << "  tick "
         << state.tick_index;
  if (state.edible_timer > 0) status << "  blue " << state.edible_timer;
  if (state.status == GameStatus::Cleared) status << "  CLEARED";
  if (state.status == GameStatus::GameOver) status << "  GAME OVER";
  frame.status = status.str();
  return frame;
}

std::string frame_text(const RenderFrame& frame) {
  std::string text;
  for (const auto& row : frame.grid) {
    text += row;
    text += '\n';
  }
  text += frame.status;
  text += '\n';
  return text;
}

namespace {

// Puts the terminal into raw, non-echoing mode for the object's lifetime.
class RawTerminal {
 public:
  RawTerminal() {
    if (tcgetattr(STDIN_FILENO, &saved_) != 0) {
      throw std::runtime_error("cannot read terminal attributes");
    }
    termios raw = saved_;
    raw.c_lflag &= ~static_cast<tcflag_t>(ICANON | ECHO);
    raw.c_cc[VMIN] = 0;
    raw.c_cc[VTIME] = 0;
    if (tcsetattr(STDIN_FILENO, TCSANOW, &raw) != 0) {
      throw std::runtime_error("cannot set terminal attributes");
    }
  }
  ~RawTerminal() { tcsetattr(STDIN_FILENO, TCSANOW, &saved_); }

 private:
  termios saved_;
};

void require_terminal() {
  if (!isatty(STDIN_FILENO) || !isatty(STDOUT_FILENO)) {
    throw std::runtime_error(
        "interactive play needs a terminal on stdin/stdout; "
        "use the replay mode to view recorded games");
  }
}

// Millisecond-bounded wait for one key. Decodes arrow-key escape
// sequences to 'U','D','L','R'; other keys pass through.
std::optional<char> poll_key(int timeout_ms) {
  fd_set readable;
  FD_ZERO(&readable);
  FD_SET(STDIN_FILENO, &readable);
  timeval tv;
  tv.tv_sec = timeout_ms / 1000;
  tv.tv_usec = (timeout_ms % 1000) * 1000;
  if (select(STDIN_FILENO + 1, &readable, nullptr, nullptr, &tv) <= 0) {
    return std::nullopt;
  }
  char c = 0;
  if (read(STDIN_FILENO, &c, 1) != 1) return std::nullopt;
  if (c != '\033') return c;
  char seq[2] = {0, 0};
  if (read(STDIN_FILENO, &seq[0], 1) != 1) return '\033';
  if (seq[0] != '[') return '\033';
  if (read(STDIN_FILENO, &seq[1], 1) != 1) return '\033';
  switch (seq[1]) {
    case 'A': return 'U';
    case 'B': return 'D';
    case 'C': return 'R';
    case 'D': return 'L';
  }
  return '\033';
}

std::optional<Dir> key_direction(char key) {
  switch (key) {
    case 'U': case 'w': case 'W': return Dir::North;
    case 'D': case 's': case 'S': return Dir::South;
    case 'L': case 'a': case 'A': return Dir::West;
    case 'R': case 'd': return Dir::East;
  }
  return std::nullopt;
}

void draw_frame(const GameState& state) {
  // Home the cursor and repaint in place.
  std::fputs("\033[H\033[J", stdout);
  std::fputs(frame_text(render(state)).c_str(), stdout);
  std::fputs("\n(arrows/WASD steer, q quits)\n", stdout);
  std::fflush(stdout);
}

TickRecord make_record(const GameState& state, std::vector<TickEvent> events) {
  TickRecord record;
  record.tick = state.tick_index - 1;
  record.pacman = state.pacman;
  record.pacman_dir = state.pacman_dir;
  record.ghosts = state.ghosts;
  record.events = std::move(events);
  record.score = state.score;
  record.lives = state.lives;
  return record;
}

}  // namespace

Trace human_play_session(const Maze& maze, const std::string& maze_text,
                         std::uint64_t seed, double tick_rate, long tick_limit,
                         const GameConfig& config) {
  require_terminal();
  if (tick_rate <= 0) throw std::invalid_argument("tick_rate must be positive");
  RawTerminal raw;

  Rng env_rng(derive_seed(seed, 0x0e17));
  GameState state = new_game(maze, config);
  Trace trace;
  trace.maze_text = maze_text;
  trace.seed = seed;

  const auto tick_interval =
      std::chrono::microseconds(static_cast<long>(1e6 / tick_rate));
  Dir desired = state.pacman_dir;
  bool quit = false;

  draw_frame(state);
  while (!quit && state.status == GameStatus::Running &&
         state.tick_index < tick_limit) {
    auto deadline = std::chrono::steady_clock::now() + tick_interval;
    for (;;) {
      auto remaining = std::chrono::duration_cast<std::chrono::milliseconds>(
          deadline - std::chrono::steady_clock::now());
      if (remaining.count() <= 0) break;
      auto key = poll_key(static_cast<int>(remaining.count()));
      if (!key) break;
      if (*key == 'q' || *key == 'Q') {
        quit = true;
        break;
      }
      if (auto dir = key_direction(*key)) desired = *dir;  // last key wins
    }
    if (quit) break;
    std::vector<TickEvent> events = tick(state, desired, env_rng);
    trace.episode.trace.push_back(make_record(state, std::move(events)));
    draw_frame(state);
  }

  trace.episode.final_score = state.score;
  trace.episode.ticks = state.tick_index;
  trace.episode.status = state.status;
  std::fputs("\n", stdout);
  return trace;
}

Trace watch_policy(const Maze& maze, const std::string& maze_text,
                   const RulePolicy& policy, std::uint64_t seed,
                   double tick_rate, long tick_limit, const GameConfig& config) {
  if (tick_rate <= 0) throw std::invalid_argument("tick_rate must be positive");
  Rng env_rng(derive_seed(seed, 0x0e17));
  GameState state = new_game(maze, config);
  PolicyController controller(policy, seed);
  Trace trace;
  trace.maze_text = maze_text;
  trace.seed = seed;

  const auto tick_interval =
      std::chrono::microseconds(static_cast<long>(1e6 / tick_rate));
  draw_frame(state);
  while (state.status == GameStatus::Running && state.tick_index < tick_limit) {
    std::this_thread::sleep_for(tick_interval);
    Dir dir = controller.choose(state);
    std::vector<TickEvent> events = tick(state, dir, env_rng);
    bool life_lost = false;
    for (const auto& e : events)
      if (e.kind == TickEvent::Kind::LifeLost) life_lost = true;
    trace.episode.trace.push_back(make_record(state, std::move(events)));
    if (life_lost && state.status == GameStatus::Running) controller.on_life_lost(state);
    draw_frame(state);
  }

  trace.episode.final_score = state.score;
  trace.episode.ticks = state.tick_index;
  trace.episode.status = state.status;
  std::fputs("\n", stdout);
  return trace;
}

void replay_trace(const Trace& trace, double speed, std::ostream& out) {
  Maze maze = Maze::parse(trace.maze_text);
  GameState state = new_game(maze);

  std::optional<RawTerminal> raw;
  if (speed == 0) {
    require_terminal();
    raw.emplace();
  }

  auto show = [&](const GameState& s) {
    if (speed >= 0) out << "\033[H\033[J";
    out << frame_text(render(s));
    if (speed < 0) out << "\n";
    out.flush();
  };

  auto pace = [&] {
    if (speed > 0) {
      std::this_thread::sleep_for(
          std::chrono::microseconds(static_cast<long>(1e6 / speed)));
    } else if (speed == 0) {
      while (!poll_key(50)) {
      }
    }
  };

  show(state);
  for (const TickRecord& record : trace.episode.trace) {
    pace();
    // Advance the display state from the recorded tick: positions and
    // counters come from the record, dot removal from the events.
    for (const TickEvent& event : record.events) {
      if (event.kind == TickEvent::Kind::DotEaten) {
        state.dots[maze.index(record.pacman)] = 0;
      } else if (event.kind == TickEvent::Kind::PowerDotEaten) {
        state.power_dots[maze.index(record.pacman)] = 0;
      }
    }
    state.pacman = record.pacman;
    state.pacman_dir = record.pacman_dir;
    state.ghosts = record.ghosts;
    state.score = record.score;
    state.lives = record.lives;
    state.tick_index = record.tick + 1;
    show(state);
  }

  state.status = trace.episode.status;
  state.score = trace.episode.final_score;
  out << "replayed " << trace.episode.trace.size() << " ticks, final score "
      << trace.episode.final_score << "\n";
}

}  // namespace pacrl
