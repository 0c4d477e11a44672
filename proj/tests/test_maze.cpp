#include "doctest.h"
#include "pacrl/data.hpp"
#include "pacrl/maze.hpp"

#include <fstream>
#include <sstream>

using namespace pacrl;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

MazeParseError::Code parse_error_code(std::string_view text) {
  try {
    Maze::parse(text);
  } catch (const MazeParseError& error) {
    return error.code();
  }
  FAIL("expected MazeParseError");
  return MazeParseError::Code::BadCharacter;
}

}  // namespace

TEST_CASE("bundled maze matches the on-disk copy byte for byte") {
  CHECK(std::string(default_maze_text()) == read_file(std::string(PACRL_DATA_DIR) + "/default.maze"));
}

TEST_CASE("default maze has the published pickup counts") {
  Maze maze = Maze::parse(default_maze_text());
  CHECK(maze.dot_count() == 174);
  CHECK(maze.power_dot_count() == 4);
  CHECK(maze.width() == 19);
  CHECK(maze.height() == 23);
  // Power dots sit in the four corners.
  CHECK(maze.initial_power_dot({1, 1}));
  CHECK(maze.initial_power_dot({17, 1}));
  CHECK(maze.initial_power_dot({1, 21}));
  CHECK(maze.initial_power_dot({17, 21}));
  // Spawns are distinct walkable cells.
  CHECK(maze.walkable(maze.pacman_spawn()));
  CHECK(maze.walkable(maze.ghost_pen()));
  CHECK(!(maze.pacman_spawn() == maze.ghost_pen()));
}

TEST_CASE("maximum available score on the default maze is 13900") {
  Maze maze = Maze::parse(default_maze_text());
  int max_score = maze.dot_count() * 10 + maze.power_dot_count() * 40 +
                  maze.power_dot_count() * (200 + 400 + 800 + 1600);
  CHECK(max_score == 13900);
}

TEST_CASE("parse rejects malformed mazes with specific codes") {
  CHECK(parse_error_code("###\n#P?\n###\n") == MazeParseError::Code::BadCharacter);
  CHECK(parse_error_code("###\n###\n") == MazeParseError::Code::NoWalkableCells);
  CHECK(parse_error_code("#####\n#P.P#\n##G##\n#####\n") ==
        MazeParseError::Code::DuplicatePacmanSpawn);
  CHECK(parse_error_code("###\n#.#\n###\n") == MazeParseError::Code::MissingPacmanSpawn);
  CHECK(parse_error_code("#####\n#GPG#\n#####\n") == MazeParseError::Code::DuplicateGhostPen);
  CHECK(parse_error_code("###\n#P#\n###\n") == MazeParseError::Code::MissingGhostPen);
  CHECK(parse_error_code("#####\n#P#G#\n#####\n") == MazeParseError::Code::Disconnected);
}

TEST_CASE("short lines are padded with walls") {
  Maze maze = Maze::parse("#####\n#PG.#\n##\n#####\n");
  CHECK(maze.width() == 5);
  CHECK(!maze.walkable({3, 2}));
  CHECK(maze.dot_count() == 1);
}

TEST_CASE("junction detection needs three open neighbours") {
  Maze maze = Maze::parse(
      "#####\n"
      "#.#.#\n"
      "#P.G#\n"
      "#.#.#\n"
      "#####\n");
  CHECK(maze.is_junction({1, 2}));   // degree 3
  CHECK(!maze.is_junction({2, 2}));  // straight corridor, degree 2
  CHECK(!maze.is_junction({1, 1}));  // dead end, degree 1
}

TEST_CASE("walkable_cells agrees with walkable_count") {
  Maze maze = Maze::parse(default_maze_text());
  CHECK(static_cast<int>(maze.walkable_cells().size()) == maze.walkable_count());
  for (Cell c : maze.walkable_cells()) CHECK(maze.walkable(c));
}

TEST_CASE("direction helpers are consistent") {
  for (Dir d : kAllDirs) {
    CHECK(opposite(opposite(d)) == d);
    CHECK(right_of(left_of(d)) == d);
    CHECK(dir_from_char(dir_char(d)) == d);
    Cell c{5, 5};
    CHECK(step(step(c, d), opposite(d)) == c);
  }
  CHECK(dir_char(Dir::North) == 'N');
  CHECK_THROWS_AS(dir_from_char('x'), std::invalid_argument);
}
