#include "doctest.h"
#include "pacrl/data.hpp"
#include "pacrl/policy.hpp"
#include "pacrl/trace.hpp"

#include <cstdio>
#include <string>

using namespace pacrl;

namespace {

Trace agent_trace(std::uint64_t seed, long ticks) {
  Maze maze = Maze::parse(default_maze_text());
  RulePolicy policy = parse_policy(handcoded_policy_text());
  PolicyController controller(policy, seed);
  Trace trace;
  trace.maze_text = std::string(default_maze_text());
  trace.seed = seed;
  trace.episode = play_episode(maze, controller, seed, ticks);
  return trace;
}

}  // namespace

TEST_CASE("traces round-trip through their text form byte-identically") {
  Trace trace = agent_trace(31, 500);
  std::string text = format_trace(trace);
  Trace parsed = parse_trace(text);
  CHECK(format_trace(parsed) == text);
  CHECK(parsed.seed == trace.seed);
  CHECK(parsed.maze_text == trace.maze_text);
  CHECK(parsed.episode.final_score == trace.episode.final_score);
  CHECK(parsed.episode.ticks == trace.episode.ticks);
  CHECK(parsed.episode.status == trace.episode.status);
  REQUIRE(parsed.episode.trace.size() == trace.episode.trace.size());
  for (std::size_t t = 0; t < trace.episode.trace.size(); ++t) {
    const TickRecord& a = trace.episode.trace[t];
    const TickRecord& b = parsed.episode.trace[t];
    CHECK(a.tick == b.tick);
    CHECK(a.pacman == b.pacman);
    CHECK(a.pacman_dir == b.pacman_dir);
    CHECK(a.score == b.score);
    CHECK(a.lives == b.lives);
    REQUIRE(a.events.size() == b.events.size());
    for (int g = 0; g < kGhostCount; ++g) {
      CHECK(a.ghosts[g].pos == b.ghosts[g].pos);
      CHECK(a.ghosts[g].edible == b.ghosts[g].edible);
      CHECK(a.ghosts[g].in_pen == b.ghosts[g].in_pen);
    }
  }
}

TEST_CASE("trace files save and load") {
  Trace trace = agent_trace(7, 200);
  const std::string path = "test_trace_roundtrip.trace";
  save_trace_file(path, trace);
  Trace loaded = load_trace_file(path);
  CHECK(format_trace(loaded) == format_trace(trace));
  std::remove(path.c_str());
  CHECK_THROWS_AS(load_trace_file("no_such_file.trace"), std::runtime_error);
}

TEST_CASE("corrupt traces fail with the offending line number") {
  Trace trace = agent_trace(13, 50);
  std::string text = format_trace(trace);

  SUBCASE("bad header") {
    try {
      parse_trace("not-a-trace\n");
      FAIL("expected TraceError");
    } catch (const TraceError& error) {
      CHECK(error.line() == 1);
    }
  }

  SUBCASE("truncation is reported at the cut") {
    // Drop everything from the final 'end' line onwards.
    std::size_t cut = text.rfind("end ");
    std::string truncated = text.substr(0, cut);
    int expected_line = 1;
    for (char c : truncated) {
      if (c == '\n') ++expected_line;
    }
    try {
      parse_trace(truncated);
      FAIL("expected TraceError");
    } catch (const TraceError& error) {
      CHECK(error.line() == expected_line);
    }
  }

  SUBCASE("mangled tick line is named") {
    std::size_t tick_pos = text.find("tick 3 ");
    REQUIRE(tick_pos != std::string::npos);
    std::string mangled = text;
    mangled.replace(tick_pos, 6, "tick x");
    try {
      parse_trace(mangled);
      FAIL("expected TraceError");
    } catch (const TraceError& error) {
      int line = 1;
      for (std::size_t i = 0; i < tick_pos; ++i) {
        if (text[i] == '\n') ++line;
      }
      CHECK(error.line() == line);
    }
  }

  SUBCASE("score mismatch at the end line is rejected") {
    std::size_t end_pos = text.rfind("end ");
    std::string mangled = text.substr(0, end_pos) + "end 999999 " +
                          std::to_string(trace.episode.ticks) + " running\n";
    CHECK_THROWS_AS(parse_trace(mangled), TraceError);
  }
}

TEST_CASE("human and agent traces share one format") {
  // A hand-assembled minimal trace parses like an agent one.
  Trace trace;
  trace.maze_text = std::string(default_maze_text());
  trace.seed = 1;
  trace.episode.final_score = 0;
  trace.episode.ticks = 0;
  trace.episode.status = GameStatus::Running;
  Trace parsed = parse_trace(format_trace(trace));
  CHECK(parsed.episode.trace.empty());
  CHECK(parsed.episode.status == GameStatus::Running);
}
