#include "pacrl/maze.hpp"

#include <queue>

namespace pacrl {

const char* dir_name(Dir d) {
  switch (d) {
    case Dir::North: return "N";
    case Dir::East: return "E";
    case Dir::South: return "S";
    case Dir::West: return "W";
  }
  return "?";
}

char dir_char(Dir d) { return dir_name(d)[0]; }

Dir dir_from_char(char c) {
  switch (c) {
    case 'N': return Dir::North;
    case 'E': return Dir::East;
    case 'S': return Dir::South;
    case 'W': return Dir::West;
  }
  throw std::invalid_argument(std::string("bad direction character: ") + c);
}

Maze Maze::parse(std::string_view text) {
  std::vector<std::string> lines;
  std::string current;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) lines.push_back(current);
  while (!lines.empty() && lines.back().empty()) lines.pop_back();

  Maze m;
  m.height_ = static_cast<int>(lines.size());
  m.width_ = 0;
  for (const auto& l : lines) m.width_ = std::max(m.width_, static_cast<int>(l.size()));
  m.walls_.assign(m.size(), 1);
  m.dots_.assign(m.size(), 0);
  m.power_dots_.assign(m.size(), 0);

  int pacman_spawns = 0;
  int ghost_pens = 0;
  for (int y = 0; y < m.height_; ++y) {
    for (int x = 0; x < static_cast<int>(lines[y].size()); ++x) {
      const char c = lines[y][x];
      const int idx = y * m.width_ + x;
      switch (c) {
        case '#':
          break;
        case '.':
          m.walls_[idx] = 0;
          m.dots_[idx] = 1;
          break;
        case 'o':
          m.walls_[idx] = 0;
          m.power_dots_[idx] = 1;
          break;
        case ' ':
          m.walls_[idx] = 0;
          break;
        case 'P':
          m.walls_[idx] = 0;
          m.pacman_spawn_ = {x, y};
          ++pacman_spawns;
          break;
        case 'G':
          m.walls_[idx] = 0;
          m.ghost_pen_ = {x, y};
          ++ghost_pens;
          break;
        default:
          throw MazeParseError(MazeParseError::Code::BadCharacter,
                               "maze: bad character '" + std::string(1, c) + "' at " +
                                   std::to_string(x) + "," + std::to_string(y));
      }
    }
  }

  for (std::uint8_t w : m.walls_)
    if (!w) ++m.walkable_count_;
  if (m.walkable_count_ == 0)
    throw MazeParseError(MazeParseError::Code::NoWalkableCells, "maze: no walkable cells");
  if (pacman_spawns > 1)
    throw MazeParseError(MazeParseError::Code::DuplicatePacmanSpawn, "maze: duplicate pacman spawn");
  if (pacman_spawns == 0)
    throw MazeParseError(MazeParseError::Code::MissingPacmanSpawn, "maze: missing pacman spawn");
  if (ghost_pens > 1)
    throw MazeParseError(MazeParseError::Code::DuplicateGhostPen, "maze: duplicate ghost pen");
  if (ghost_pens == 0)
    throw MazeParseError(MazeParseError::Code::MissingGhostPen, "maze: missing ghost pen");

  for (int i = 0; i < m.size(); ++i) {
    m.dot_count_ += m.dots_[i];
    m.power_dot_count_ += m.power_dots_[i];
  }

  // Connectivity from the pacman spawn.
  std::vector<std::uint8_t> seen(m.size(), 0);
  std::queue<Cell> queue;
  queue.push(m.pacman_spawn_);
  seen[m.index(m.pacman_spawn_)] = 1;
  int reached = 0;
  while (!queue.empty()) {
    const Cell c = queue.front();
    queue.pop();
    ++reached;
    for (Dir d : kAllDirs) {
      const Cell n = step(c, d);
      if (m.walkable(n) && !seen[m.index(n)]) {
        seen[m.index(n)] = 1;
        queue.push(n);
      }
    }
  }
  if (reached != m.walkable_count_)
    throw MazeParseError(MazeParseError::Code::Disconnected,
                         "maze: " + std::to_string(m.walkable_count_ - reached) +
                             " walkable cells unreachable from pacman spawn");
  return m;
}

bool Maze::is_junction(Cell c) const {
  if (!walkable(c)) return false;
  int n = 0;
  for (Dir d : kAllDirs)
    if (walkable(step(c, d))) ++n;
  return n >= 3;
}

std::vector<Cell> Maze::walkable_cells() const {
  std::vector<Cell> out;
  out.reserve(walkable_count_);
  for (int i = 0; i < size(); ++i)
    if (!walls_[i]) out.push_back(cell(i));
  return out;
}

}  // namespace pacrl
