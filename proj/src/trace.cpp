#include "pacrl/trace.hpp"

#include <fstream>
#include <sstream>

namespace pacrl {

namespace {

char event_char(TickEvent::Kind kind) {
  switch (kind) {
    case TickEvent::Kind::DotEaten: return 'D';
    case TickEvent::Kind::PowerDotEaten: return 'O';
    case TickEvent::Kind::GhostEaten: return 'G';
    case TickEvent::Kind::LifeLost: return 'L';
    case TickEvent::Kind::ExtraLife: return 'X';
    case TickEvent::Kind::LevelCleared: return 'C';
  }
  return '?';
}

TickEvent::Kind event_kind(char c, int line) {
  switch (c) {
    case 'D': return TickEvent::Kind::DotEaten;
    case 'O': return TickEvent::Kind::PowerDotEaten;
    case 'G': return TickEvent::Kind::GhostEaten;
    case 'L': return TickEvent::Kind::LifeLost;
    case 'X': return TickEvent::Kind::ExtraLife;
    case 'C': return TickEvent::Kind::LevelCleared;
  }
  throw TraceError(line, std::string("unknown event kind '") + c + "'");
}

const char* status_name(GameStatus status) {
  switch (status) {
    case GameStatus::Running: return "running";
    case GameStatus::Cleared: return "cleared";
    case GameStatus::GameOver: return "gameover";
  }
  return "?";
}

GameStatus status_from_name(const std::string& name, int line) {
  if (name == "running") return GameStatus::Running;
  if (name == "cleared") return GameStatus::Cleared;
  if (name == "gameover") return GameStatus::GameOver;
  throw TraceError(line, "unknown status '" + name + "'");
}

}  // namespace

std::string format_trace(const Trace& trace) {
  std::ostringstream out;
  out << "pacman-trace 1\n";
  out << "seed " << trace.seed << "\n";

  // Embed the maze so replays are self-contained.
  int maze_lines = 0;
  for (char c : trace.maze_text) {
    if (c == '\n') ++maze_lines;
  }
  out << "maze " << maze_lines << "\n" << trace.maze_text;

  for (const TickRecord& record : trace.episode.trace) {
    out << "tick " << record.tick << " pac " << record.pacman.x << ","
        << record.pacman.y << "," << dir_char(record.pacman_dir) << " ghosts ";
    for (int g = 0; g < kGhostCount; ++g) {
      const GhostState& ghost = record.ghosts[g];
      if (g > 0) out << ";";
      out << ghost.pos.x << "," << ghost.pos.y << "," << dir_char(ghost.dir)
          << "," << (ghost.edible ? 1 : 0) << "," << (ghost.in_pen ? 1 : 0);
    }
    out << " score " << record.score << " lives " << record.lives << " events ";
    if (record.events.empty()) {
      out << "-";
    } else {
      for (std::size_t e = 0; e < record.events.size(); ++e) {
        if (e > 0) out << ";";
        out << event_char(record.events[e].kind) << ":" << record.events[e].points
            << ":" << record.events[e].ghost;
      }
    }
    out << "\n";
  }

  out << "end " << trace.episode.final_score << " " << trace.episode.ticks << " "
      << status_name(trace.episode.status) << "\n";
  return out.str();
}

namespace {

// Splits on a single-character separator; empty fields are kept.
std::vector<std::string> split(const std::string& text, char separator) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : text) {
    if (c == separator) {
      parts.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  parts.push_back(current);
  return parts;
}

long parse_long(const std::string& text, int line, const char* what) {
  try {
    std::size_t used = 0;
    long value = std::stol(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return value;
  } catch (const std::exception&) {
    throw TraceError(line, std::string("bad ") + what + " '" + text + "'");
  }
}

Cell parse_cell(const std::string& x, const std::string& y, int line) {
  return Cell{static_cast<int>(parse_long(x, line, "x coordinate")),
              static_cast<int>(parse_long(y, line, "y coordinate"))};
}

Dir parse_dir(const std::string& text, int line) {
  if (text.size() == 1) {
    try {
      return dir_from_char(text[0]);
    } catch (const std::invalid_argument&) {
    }
  }
  throw TraceError(line, "bad direction '" + text + "'");
}

}  // namespace

Trace parse_trace(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_number = 0;

  auto next_line = [&](const char* what) {
    if (!std::getline(in, line)) {
      throw TraceError(line_number + 1,
                       std::string("unexpected end of file, expected ") + what);
    }
    ++line_number;
  };

  next_line("header");
  if (line != "pacman-trace 1") {
    throw TraceError(line_number, "bad header '" + line + "'");
  }

  Trace trace;

  next_line("seed line");
  {
    std::istringstream fields(line);
    std::string keyword, value;
    if (!(fields >> keyword >> value) || keyword != "seed") {
      throw TraceError(line_number, "expected 'seed <value>', got '" + line + "'");
    }
    try {
      trace.seed = std::stoull(value);
    } catch (const std::exception&) {
      throw TraceError(line_number, "bad seed '" + value + "'");
    }
  }

  next_line("maze line");
  long maze_lines = 0;
  {
    std::istringstream fields(line);
    std::string keyword, value;
    if (!(fields >> keyword >> value) || keyword != "maze") {
      throw TraceError(line_number, "expected 'maze <lines>', got '" + line + "'");
    }
    maze_lines = parse_long(value, line_number, "maze line count");
    if (maze_lines < 1) throw TraceError(line_number, "maze line count must be positive");
  }
  for (long i = 0; i < maze_lines; ++i) {
    next_line("maze row");
    trace.maze_text += line;
    trace.maze_text += '\n';
  }

  bool saw_end = false;
  while (!saw_end) {
    next_line("tick or end line");
    std::istringstream fields(line);
    std::string keyword;
    fields >> keyword;
    if (keyword == "end") {
      std::string score, ticks, status;
      if (!(fields >> score >> ticks >> status)) {
        throw TraceError(line_number, "expected 'end <score> <ticks> <status>'");
      }
      trace.episode.final_score = static_cast<int>(parse_long(score, line_number, "score"));
      trace.episode.ticks = parse_long(ticks, line_number, "tick count");
      trace.episode.status = status_from_name(status, line_number);
      saw_end = true;
      continue;
    }
    if (keyword != "tick") {
      throw TraceError(line_number, "expected 'tick' or 'end', got '" + keyword + "'");
    }
    std::string tick, pac_keyword, pac, ghosts_keyword, ghosts, score_keyword, score,
        lives_keyword, lives, events_keyword, events;
    if (!(fields >> tick >> pac_keyword >> pac >> ghosts_keyword >> ghosts >>
          score_keyword >> score >> lives_keyword >> lives >> events_keyword >>
          events) ||
        pac_keyword != "pac" || ghosts_keyword != "ghosts" ||
        score_keyword != "score" || lives_keyword != "lives" ||
        events_keyword != "events") {
      throw TraceError(line_number, "malformed tick line");
    }

    TickRecord record;
    record.tick = parse_long(tick, line_number, "tick index");
    {
      auto parts = split(pac, ',');
      if (parts.size() != 3) throw TraceError(line_number, "bad pac field '" + pac + "'");
      record.pacman = parse_cell(parts[0], parts[1], line_number);
      record.pacman_dir = parse_dir(parts[2], line_number);
    }
    {
      auto ghost_parts = split(ghosts, ';');
      if (ghost_parts.size() != kGhostCount) {
        throw TraceError(line_number, "expected " + std::to_string(kGhostCount) +
                                          " ghosts, got " +
                                          std::to_string(ghost_parts.size()));
      }
      for (int g = 0; g < kGhostCount; ++g) {
        auto parts = split(ghost_parts[g], ',');
        if (parts.size() != 5) {
          throw TraceError(line_number, "bad ghost field '" + ghost_parts[g] + "'");
        }
        GhostState& ghost = record.ghosts[g];
        ghost.pos = parse_cell(parts[0], parts[1], line_number);
        ghost.dir = parse_dir(parts[2], line_number);
        ghost.edible = parse_long(parts[3], line_number, "edible flag") != 0;
        ghost.in_pen = parse_long(parts[4], line_number, "pen flag") != 0;
      }
    }
    record.score = static_cast<int>(parse_long(score, line_number, "score"));
    record.lives = static_cast<int>(parse_long(lives, line_number, "lives"));
    if (events != "-") {
      for (const auto& part : split(events, ';')) {
        auto pieces = split(part, ':');
        if (pieces.size() != 3 || pieces[0].size() != 1) {
          throw TraceError(line_number, "bad event '" + part + "'");
        }
        TickEvent event;
        event.kind = event_kind(pieces[0][0], line_number);
        event.points = static_cast<int>(parse_long(pieces[1], line_number, "event points"));
        event.ghost = static_cast<int>(parse_long(pieces[2], line_number, "event ghost"));
        record.events.push_back(event);
      }
    }
    trace.episode.trace.push_back(std::move(record));
  }

  if (!trace.episode.trace.empty() &&
      trace.episode.trace.back().score != trace.episode.final_score) {
    throw TraceError(line_number, "final score does not match last tick");
  }
  return trace;
}

Trace load_trace_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open trace file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_trace(buffer.str());
}

void save_trace_file(const std::string& path, const Trace& trace) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write trace file: " + path);
  out << format_trace(trace);
}

}  // namespace pacrl
