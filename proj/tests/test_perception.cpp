#include "doctest.h"
#include "pacrl/data.hpp"
#include "pacrl/perception.hpp"

#include <cmath>
#include <string>
#include <vector>

using namespace pacrl;

namespace {

// Independent all-pairs oracle for BFS distances on the corridor graph.
std::vector<std::vector<long>> floyd_warshall(const Maze& maze) {
  const long kInf = 1L << 40;
  const int n = maze.size();
  std::vector<std::vector<long>> dist(n, std::vector<long>(n, kInf));
  for (int i = 0; i < n; ++i) {
    Cell c = maze.cell(i);
    if (!maze.walkable(c)) continue;
    dist[i][i] = 0;
    for (Dir d : kAllDirs) {
      Cell next = step(c, d);
      if (maze.walkable(next)) dist[i][maze.index(next)] = 1;
    }
  }
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      if (dist[i][k] >= kInf) continue;
      for (int j = 0; j < n; ++j) {
        if (dist[i][k] + dist[k][j] < dist[i][j]) dist[i][j] = dist[i][k] + dist[k][j];
      }
    }
  }
  return dist;
}

// Random connected maze up to max_width x max_height with spawns.
Maze random_maze(Rng& rng, int max_width, int max_height) {
  for (;;) {
    int width = 4 + rng.uniform_int(max_width - 3);
    int height = 4 + rng.uniform_int(max_height - 3);
    std::vector<std::string> rows(height, std::string(width, '#'));
    for (int y = 1; y < height - 1; ++y) {
      for (int x = 1; x < width - 1; ++x) {
        if (rng.uniform01() < 0.6) rows[y][x] = '.';
      }
    }
    std::vector<Cell> open;
    for (int y = 0; y < height; ++y) {
      for (int x = 0; x < width; ++x) {
        if (rows[y][x] == '.') open.push_back({x, y});
      }
    }
    if (open.size() < 2) continue;
    Cell p = open[rng.uniform_int(static_cast<int>(open.size()))];
    Cell g = open[rng.uniform_int(static_cast<int>(open.size()))];
    if (p == g) continue;
    rows[p.y][p.x] = 'P';
    rows[g.y][g.x] = 'G';
    std::string text;
    for (const auto& row : rows) {
      text += row;
      text += '\n';
    }
    try {
      return Maze::parse(text);
    } catch (const MazeParseError&) {
      continue;  // disconnected draw, try again
    }
  }
}

}  // namespace

TEST_CASE("distance_field equals Floyd-Warshall on random small mazes") {
  Rng rng(2024);
  for (int trial = 0; trial < 25; ++trial) {
    Maze maze = random_maze(rng, 10, 10);
    auto oracle = floyd_warshall(maze);
    for (Cell source : maze.walkable_cells()) {
      const Cell sources[1] = {source};
      DistanceField field = distance_field(maze, sources);
      for (Cell target : maze.walkable_cells()) {
        long expected = oracle[maze.index(source)][maze.index(target)];
        if (expected >= (1L << 40)) {
          CHECK(!field.reachable(target));
        } else {
          CHECK(field.at(target) == static_cast<int>(expected));
        }
      }
    }
  }
}

TEST_CASE("multi-source field is the minimum over single-source fields") {
  Maze maze = Maze::parse(default_maze_text());
  std::vector<Cell> sources = {{1, 1}, {17, 21}, {9, 13}};
  DistanceField multi = distance_field(maze, sources);
  for (Cell c : maze.walkable_cells()) {
    int best = DistanceField::kUnreachable;
    for (Cell s : sources) {
      const Cell one[1] = {s};
      best = std::min(best, distance_field(maze, one).at(c));
    }
    CHECK(multi.at(c) == best);
  }
}

TEST_CASE("observation names round-trip and accept the safety alias") {
  for (int i = 0; i < kObservationCount; ++i) {
    auto id = static_cast<ObsId>(i);
    auto back = obs_from_name(obs_name(id));
    REQUIRE(back.has_value());
    CHECK(*back == id);
  }
  CHECK(obs_from_name("JunctionSafety") == ObsId::MaxJunctionSafety);
  CHECK(!obs_from_name("NoSuchObservation").has_value());
}

TEST_CASE("fresh default-maze observations have the expected shape") {
  Maze maze = Maze::parse(default_maze_text());
  GameState state = new_game(maze);
  ObservationVector obs = observe(state);

  CHECK(obs[ObsId::Constant] == 1.0);
  CHECK(obs[ObsId::NearestDot] == 1.0);         // dots ring the spawn row
  CHECK(obs[ObsId::NearestPowerDot] > 1.0);     // corners are far away
  CHECK(obs[ObsId::NearestEdGhost] == kInfiniteObservation);  // nothing edible
  CHECK(obs[ObsId::NearestGhost] == kInfiniteObservation);    // all ghosts penned
  CHECK(obs[ObsId::MaxJunctionSafety] == kInfiniteObservation);
  CHECK(obs[ObsId::GhostDensity] == 0.0);
  CHECK(obs[ObsId::DotCenterDist] > 0.0);
}

TEST_CASE("ghost density decays linearly with radius 10") {
  Maze maze = Maze::parse(
      "###########\n"
      "#P.......G#\n"
      "###########\n");
  GameState state = new_game(maze, GameConfig{.pen_delay = 1000});
  state.ghosts[0].in_pen = false;
  state.ghosts[0].pos = {8, 1};
  // One active ghost at step distance 7 from pacman.
  CHECK(ghost_density_at(state, state.pacman) == doctest::Approx(0.3));
  // At the ghost's own cell the contribution is 1.
  CHECK(ghost_density_at(state, {8, 1}) == doctest::Approx(1.0));
  // Two ghosts add up.
  state.ghosts[1].in_pen = false;
  state.ghosts[1].pos = {8, 1};
  CHECK(ghost_density_at(state, state.pacman) == doctest::Approx(0.6));
}

TEST_CASE("edible ghosts are excluded from the threat distance") {
  Maze maze = Maze::parse(
      "###########\n"
      "#P.......G#\n"
      "###########\n");
  GameState state = new_game(maze, GameConfig{.pen_delay = 1000});
  state.ghosts[0].in_pen = false;
  state.ghosts[0].pos = {3, 1};
  state.ghosts[0].edible = true;
  state.edible_timer = 20;
  ObservationVector obs = observe(state);
  CHECK(obs[ObsId::NearestEdGhost] == 2.0);
  CHECK(obs[ObsId::NearestGhost] == kInfiniteObservation);
}

TEST_CASE("no junction in a direction gives the negative sentinel") {
  Maze corridor = Maze::parse(
      "#######\n"
      "#P...G#\n"
      "#######\n");
  GameState state = new_game(corridor, GameConfig{.pen_delay = 1000});
  state.ghosts[0].in_pen = false;
  state.ghosts[0].pos = {4, 1};
  auto safety = junction_safety_per_direction(state);
  for (double s : safety) CHECK(s == -kInfiniteObservation);
}

TEST_CASE("junction safety races ghost and pacman to the junction") {
  Maze cross = Maze::parse(
      "#########\n"
      "#P......#\n"
      "####.####\n"
      "####G####\n"
      "#########\n");
  GameState state = new_game(cross, GameConfig{.pen_delay = 1000});
  state.ghosts[0].in_pen = false;
  state.ghosts[0].pos = {4, 3};
  // Junction at (4,1): pacman reaches it in 3 steps going east, the
  // ghost in 2; safety = k - n = -1.
  auto safety = junction_safety_per_direction(state);
  int east = static_cast<int>(Dir::East);
  int west = static_cast<int>(Dir::West);
  CHECK(safety[east] == 2 - 3);
  CHECK(safety[west] == -kInfiniteObservation);  // wall that way
}
