#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "pacrl/game.hpp"
#include "pacrl/maze.hpp"

namespace pacrl {

// A recorded episode: the maze it was played on, the seed, and the
// per-tick state stream. Human and agent games share this format.
struct Trace {
  std::string maze_text;
  std::uint64_t seed = 0;
  EpisodeResult episode;
};

class TraceError : public std::runtime_error {
 public:
  TraceError(int line, const std::string& what)
      : std::runtime_error("trace line " + std::to_string(line) + ": " + what),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

std::string format_trace(const Trace& trace);
Trace parse_trace(std::string_view text);

Trace load_trace_file(const std::string& path);
void save_trace_file(const std::string& path, const Trace& trace);

}  // namespace pacrl
