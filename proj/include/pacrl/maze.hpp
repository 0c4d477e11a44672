#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pacrl {

struct Cell {
  int x = 0;
  int y = 0;
  bool operator==(const Cell&) const = default;
};

// Fixed order N,E,S,W; all tie-breaking walks this order.
enum class Dir : std::uint8_t { North = 0, East = 1, South = 2, West = 3 };

inline constexpr std::array<Dir, 4> kAllDirs = {Dir::North, Dir::East, Dir::South, Dir::West};

constexpr Dir opposite(Dir d) { return static_cast<Dir>((static_cast<int>(d) + 2) % 4); }
constexpr Dir right_of(Dir d) { return static_cast<Dir>((static_cast<int>(d) + 1) % 4); }
constexpr Dir left_of(Dir d) { return static_cast<Dir>((static_cast<int>(d) + 3) % 4); }

constexpr Cell step(Cell c, Dir d) {
  switch (d) {
    case Dir::North: return {c.x, c.y - 1};
    case Dir::East: return {c.x + 1, c.y};
    case Dir::South: return {c.x, c.y + 1};
    case Dir::West: return {c.x - 1, c.y};
  }
  return c;
}

const char* dir_name(Dir d);
char dir_char(Dir d);
Dir dir_from_char(char c);

class MazeParseError : public std::runtime_error {
 public:
  enum class Code {
    BadCharacter,
    NoWalkableCells,
    DuplicatePacmanSpawn,
    MissingPacmanSpawn,
    DuplicateGhostPen,
    MissingGhostPen,
    Disconnected,
  };
  MazeParseError(Code code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Code code() const { return code_; }

 private:
  Code code_;
};

// Static maze geometry: walls plus the initial dot/power-dot layout.
// Characters: '#' wall, '.' dot, 'o' power dot, ' ' empty corridor,
// 'P' pacman spawn, 'G' ghost pen. Short lines are padded with walls.
class Maze {
 public:
  static Maze parse(std::string_view text);

  int width() const { return width_; }
  int height() const { return height_; }
  int size() const { return width_ * height_; }

  int index(Cell c) const { return c.y * width_ + c.x; }
  Cell cell(int index) const { return {index % width_, index / width_}; }

  bool in_bounds(Cell c) const { return c.x >= 0 && c.x < width_ && c.y >= 0 && c.y < height_; }
  bool walkable(Cell c) const { return in_bounds(c) && !walls_[index(c)]; }
  bool initial_dot(Cell c) const { return dots_[index(c)] != 0; }
  bool initial_power_dot(Cell c) const { return power_dots_[index(c)] != 0; }

  Cell pacman_spawn() const { return pacman_spawn_; }
  Cell ghost_pen() const { return ghost_pen_; }

  int dot_count() const { return dot_count_; }
  int power_dot_count() const { return power_dot_count_; }
  int walkable_count() const { return walkable_count_; }

  const std::vector<std::uint8_t>& dot_layout() const { return dots_; }
  const std::vector<std::uint8_t>& power_dot_layout() const { return power_dots_; }

  // Walkable cell with >= 3 walkable neighbours.
  bool is_junction(Cell c) const;

  std::vector<Cell> walkable_cells() const;

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<std::uint8_t> walls_;
  std::vector<std::uint8_t> dots_;
  std::vector<std::uint8_t> power_dots_;
  Cell pacman_spawn_;
  Cell ghost_pen_;
  int dot_count_ = 0;
  int power_dot_count_ = 0;
  int walkable_count_ = 0;
};

}  // namespace pacrl
