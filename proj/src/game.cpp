#include "pacrl/game.hpp"

#include <stdexcept>

#include "pacrl/perception.hpp"

namespace pacrl {

namespace {

void send_to_pen(GameState& state, int i, int delay) {
  GhostState& g = state.ghosts[i];
  g.in_pen = true;
  g.pen_timer = delay;
  g.pos = state.maze->ghost_pen();
  g.dir = Dir::North;
  g.edible = false;
}

void reset_positions(GameState& state) {
  state.pacman = state.maze->pacman_spawn();
  state.pacman_dir = Dir::East;
  for (int i = 0; i < kGhostCount; ++i)
    send_to_pen(state, i, state.config.pen_delay * (i + 1));
  state.edible_timer = 0;
}

void add_points(GameState& state, int points, std::vector<TickEvent>& events) {
  state.score += points;
  if (!state.extra_life_granted && state.score >= state.config.extra_life_score) {
    state.extra_life_granted = true;
    ++state.lives;
    events.push_back({TickEvent::Kind::ExtraLife, 0, -1});
  }
}

// Collision outcome: true when the tick must stop (life lost).
bool resolve_collision(GameState& state, int ghost, std::vector<TickEvent>& events) {
  GhostState& g = state.ghosts[ghost];
  if (g.edible && state.edible_timer > 0) {
    events.push_back({TickEvent::Kind::GhostEaten, state.ghost_chain_value, ghost});
    add_points(state, state.ghost_chain_value, events);
    state.ghost_chain_value = std::min(state.ghost_chain_value * 2, 1600);
    send_to_pen(state, ghost, state.config.pen_delay);
    return false;
  }
  events.push_back({TickEvent::Kind::LifeLost, 0, ghost});
  --state.lives;
  if (state.lives <= 0) {
    state.status = GameStatus::GameOver;
  } else {
    reset_positions(state);
  }
  return true;
}

Dir release_direction(const Maze& maze, Cell pen) {
  for (Dir d : kAllDirs)
    if (maze.walkable(step(pen, d))) return d;
  return Dir::North;
}

}  // namespace

GameState new_game(const Maze& maze, const GameConfig& config) {
  GameState state;
  state.maze = &maze;
  state.config = config;
  state.dots = maze.dot_layout();
  state.power_dots = maze.power_dot_layout();
  state.dots_left = maze.dot_count();
  state.power_dots_left = maze.power_dot_count();
  reset_positions(state);
  return state;
}

std::vector<Dir> legal_directions(const GameState& state, int mover) {
  const Maze& maze = *state.maze;
  std::vector<Dir> out;
  if (mover < 0) {
    for (Dir d : kAllDirs)
      if (maze.walkable(step(state.pacman, d))) out.push_back(d);
    return out;
  }
  const GhostState& g = state.ghosts[mover];
  const Dir reverse = opposite(g.dir);
  for (Dir d : kAllDirs)
    if (d != reverse && maze.walkable(step(g.pos, d))) out.push_back(d);
  if (out.empty() && maze.walkable(step(g.pos, reverse))) out.push_back(reverse);
  return out;
}

namespace {

GhostDecision ghost_decide_with_field(const GameState& state, int ghost, Rng& rng,
                                      const DistanceField& from_pacman) {
  const std::vector<Dir> legal = legal_directions(state, ghost);
  if (legal.size() == 1) return {legal[0], false};
  if (rng.bernoulli(0.2)) return {legal[rng.uniform_int(static_cast<int>(legal.size()))], true};

  const GhostState& g = state.ghosts[ghost];
  Dir best = legal[0];
  int best_dist = from_pacman.at(step(g.pos, legal[0]));
  for (std::size_t i = 1; i < legal.size(); ++i) {
    const int d = from_pacman.at(step(g.pos, legal[i]));
    const bool better = g.edible ? d > best_dist : d < best_dist;
    if (better) {
      best = legal[i];
      best_dist = d;
    }
  }
  return {best, false};
}

}  // namespace

GhostDecision ghost_decide(const GameState& state, int ghost, Rng& rng) {
  const Cell sources[1] = {state.pacman};
  const DistanceField field = distance_field(*state.maze, sources);
  return ghost_decide_with_field(state, ghost, rng, field);
}

std::vector<TickEvent> tick(GameState& state, Dir pacman_direction, Rng& rng) {
  if (state.status != GameStatus::Running)
    throw std::logic_error("tick called on a terminal game state");

  std::vector<TickEvent> events;
  const bool edible_move_tick = state.tick_index % 2 == 0;
  const Cell pacman_old = state.pacman;

  // Pacman phase. An illegal direction stalls for the tick.
  if (state.maze->walkable(step(state.pacman, pacman_direction))) {
    state.pacman = step(state.pacman, pacman_direction);
    state.pacman_dir = pacman_direction;
  }

  for (int i = 0; i < kGhostCount; ++i) {
    if (state.ghost_active(i) && state.ghosts[i].pos == state.pacman) {
      if (resolve_collision(state, i, events)) {
        ++state.tick_index;
        return events;
      }
    }
  }

  const int pac_idx = state.maze->index(state.pacman);
  if (state.dots[pac_idx]) {
    state.dots[pac_idx] = 0;
    --state.dots_left;
    events.push_back({TickEvent::Kind::DotEaten, 10, -1});
    add_points(state, 10, events);
  } else if (state.power_dots[pac_idx]) {
    state.power_dots[pac_idx] = 0;
    --state.power_dots_left;
    events.push_back({TickEvent::Kind::PowerDotEaten, 40, -1});
    add_points(state, 40, events);
    state.edible_timer = state.config.edible_ticks;
    state.ghost_chain_value = 200;
    for (int i = 0; i < kGhostCount; ++i)
      if (state.ghost_active(i)) state.ghosts[i].edible = true;
  }

  if (state.dots_left == 0 && state.power_dots_left == 0) {
    state.status = GameStatus::Cleared;
    events.push_back({TickEvent::Kind::LevelCleared, 0, -1});
    ++state.tick_index;
    return events;
  }

  // Ghost phase.
  const Cell pacman_sources[1] = {state.pacman};
  const DistanceField from_pacman = distance_field(*state.maze, pacman_sources);
  for (int i = 0; i < kGhostCount; ++i) {
    GhostState& g = state.ghosts[i];
    if (g.in_pen) {
      if (--g.pen_timer <= 0) {
        g.in_pen = false;
        g.pos = state.maze->ghost_pen();
        g.dir = release_direction(*state.maze, g.pos);
        g.edible = false;
        if (g.pos == state.pacman && resolve_collision(state, i, events)) {
          ++state.tick_index;
          return events;
        }
      }
      continue;
    }
    if (g.edible && !edible_move_tick) continue;  // blue ghosts move every other tick

    const Cell ghost_old = g.pos;
    const GhostDecision decision = ghost_decide_with_field(state, i, rng, from_pacman);
    g.pos = step(g.pos, decision.dir);
    g.dir = decision.dir;
    const bool swap = g.pos == pacman_old && ghost_old == state.pacman;
    if ((g.pos == state.pacman || swap) && resolve_collision(state, i, events)) {
      ++state.tick_index;
      return events;
    }
  }

  if (state.edible_timer > 0 && --state.edible_timer == 0) {
    for (auto& g : state.ghosts) g.edible = false;
  }
  ++state.tick_index;
  return events;
}

EpisodeResult play_episode(const Maze& maze, Controller& controller, std::uint64_t seed,
                           long tick_limit, const GameConfig& config) {
  if (tick_limit <= 0) throw std::invalid_argument("tick_limit must be positive");
  Rng env_rng(derive_seed(seed, 0x0e17));
  GameState state = new_game(maze, config);
  EpisodeResult result;
  result.trace.reserve(static_cast<std::size_t>(std::min<long>(tick_limit, 4096)));
  while (state.status == GameStatus::Running && state.tick_index < tick_limit) {
    const Dir dir = controller.choose(state);
    std::vector<TickEvent> events = tick(state, dir, env_rng);
    bool life_lost = false;
    for (const auto& e : events)
      if (e.kind == TickEvent::Kind::LifeLost) life_lost = true;
    TickRecord record;
    record.tick = state.tick_index - 1;
    record.pacman = state.pacman;
    record.pacman_dir = state.pacman_dir;
    record.ghosts = state.ghosts;
    record.events = std::move(events);
    record.score = state.score;
    record.lives = state.lives;
    result.trace.push_back(std::move(record));
    if (life_lost && state.status == GameStatus::Running) controller.on_life_lost(state);
  }
  result.final_score = state.score;
  result.ticks = state.tick_index;
  result.status = state.status;
  return result;
}

}  // namespace pacrl
