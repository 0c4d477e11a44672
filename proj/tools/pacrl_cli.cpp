#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "pacrl/console_ui.hpp"
#include "pacrl/data.hpp"
#include "pacrl/experiments.hpp"
#include "pacrl/policy.hpp"
#include "pacrl/trace.hpp"

namespace {

using namespace pacrl;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

struct MazeSource {
  std::string text;
  Maze maze;
};

MazeSource load_maze(const std::string& path) {
  MazeSource source{std::string(default_maze_text()), Maze::parse(default_maze_text())};
  if (!path.empty()) {
    source.text = read_file(path);
    source.maze = Maze::parse(source.text);
  }
  return source;
}

// Policy sources: a file path, "handcoded" for the bundled policy, or
// "random-baseline" for a fresh 10-rule random draw (seeded).
RulePolicy load_policy_source(const std::string& source, std::uint64_t seed) {
  if (source == "handcoded") return parse_policy(handcoded_policy_text());
  if (source == "random-baseline") {
    Rng rng(derive_seed(seed, 0xBA5E));
    return baseline_random_policy(handcoded_rulebase(), rng);
  }
  return load_policy_file(source);
}

int run_train(const std::string& config_path, const std::string& out_dir) {
  ExperimentConfig config = ExperimentConfig::from_file(config_path);
  Maze maze = load_experiment_maze(config);
  const std::string condition =
      config.rulebase == "handcoded" ? "handcoded_ce" : "random_ce";

  for (int run = 0; run < config.parallel_runs; ++run) {
    ExperimentConfig run_config = config;
    run_config.seed = derive_seed(config.seed, static_cast<std::uint64_t>(run));
    std::cout << "run " << run << " (seed " << run_config.seed << ")...\n";
    RunRecord record = train(run_config, maze);
    std::string dir = out_dir + "/" + condition + "_run" + std::to_string(run);
    write_run_record(dir, condition, record);
    std::cout << "  converged=" << (record.converged ? "yes" : "no")
              << " test_mean=" << record.test_mean << " test_high=" << record.test_high
              << " rules=" << record.effective_rule_count << " -> " << dir << "\n";
  }
  return 0;
}

int run_eval(const std::string& policy_source, int games, std::uint64_t seed,
             const std::string& maze_path, long tick_limit,
             const std::string& out_dir, std::string condition) {
  MazeSource maze = load_maze(maze_path);
  RulePolicy policy = load_policy_source(policy_source, seed);
  EvaluationResult result =
      evaluate_policy(policy, games, maze.maze, tick_limit, seed);

  int high = 0;
  for (int g = 0; g < games; ++g) {
    std::cout << "game " << g << ": " << result.scores[g] << "\n";
    high = std::max(high, result.scores[g]);
  }
  std::cout << "mean " << result.mean_score << " high " << high << " fired-rules "
            << result.fired_rules.size() << "\n";

  if (!out_dir.empty()) {
    if (condition.empty()) {
      condition = policy_source == "handcoded"        ? "handcoded_policy"
                  : policy_source == "random-baseline" ? "random_rules"
                                                       : "eval";
    }
    RunRecord record;
    record.learned = policy;
    record.test_scores = result.scores;
    record.test_mean = result.mean_score;
    record.test_high = high;
    record.effective_rule_count = static_cast<int>(result.fired_rules.size());
    ExperimentConfig config;
    config.seed = seed;
    config.test_games = games;
    config.tick_limit = tick_limit;
    config.maze_path = maze_path;
    record.config = config;
    record.best_sampled = policy;
    write_run_record(out_dir, condition, record);
    std::cout << "wrote " << out_dir << "\n";
  }
  return 0;
}

int run_play(const std::string& maze_path, std::uint64_t seed, double tick_rate,
             long tick_limit, const std::string& trace_path,
             const std::string& out_dir) {
  MazeSource maze = load_maze(maze_path);
  Trace trace = human_play_session(maze.maze, maze.text, seed, tick_rate, tick_limit);
  std::cout << "final score " << trace.episode.final_score << " after "
            << trace.episode.ticks << " ticks\n";
  if (!trace_path.empty()) {
    save_trace_file(trace_path, trace);
    std::cout << "trace written to " << trace_path << "\n";
  }
  if (!out_dir.empty()) {
    RunSummary summary;
    summary.condition = "human";
    summary.mean = trace.episode.final_score;
    summary.high = trace.episode.final_score;
    summary.rule_count = 0;
    summary.games = 1;
    std::filesystem::create_directories(out_dir);
    write_summary(out_dir + "/summary.csv", summary);
    std::cout << "wrote " << out_dir << "/summary.csv\n";
  }
  return 0;
}

int run_watch(const std::string& policy_source, std::uint64_t seed,
              const std::string& maze_path, double tick_rate, long tick_limit,
              const std::string& trace_path) {
  MazeSource maze = load_maze(maze_path);
  RulePolicy policy = load_policy_source(policy_source, seed);
  Trace trace = watch_policy(maze.maze, maze.text, policy, seed, tick_rate, tick_limit);
  std::cout << "final score " << trace.episode.final_score << " after "
            << trace.episode.ticks << " ticks\n";
  if (!trace_path.empty()) {
    save_trace_file(trace_path, trace);
    std::cout << "trace written to " << trace_path << "\n";
  }
  return 0;
}

int run_replay(const std::string& trace_path, double speed) {
  Trace trace = load_trace_file(trace_path);
  replay_trace(trace, speed, std::cout);
  return 0;
}

int run_report(const std::string& dir, const std::string& csv_path) {
  std::vector<RunSummary> summaries = collect_summaries(dir);
  if (summaries.empty()) {
    std::cerr << "no summary.csv files found under " << dir << "\n";
    return 1;
  }
  std::vector<ConditionRow> rows = aggregate_report(summaries);
  std::cout << report_text(rows);
  if (!csv_path.empty()) {
    std::ofstream out(csv_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + csv_path);
    out << report_csv(rows);
    std::cout << "csv written to " << csv_path << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Grid pac-man workbench: rule policies, cross-entropy search, replays"};
  app.require_subcommand(1);

  std::string config_path, policy_source, maze_path, trace_path, csv_path, condition;
  std::string out_dir = "runs";
  int games = 50;
  std::uint64_t seed = 1;
  long tick_limit = 3000;
  double tick_rate = 8.0;
  double speed = 8.0;

  auto* train_command = app.add_subcommand("train", "Cross-entropy policy search");
  train_command->add_option("--config", config_path, "Experiment config file")->required();
  train_command->add_option("--out", out_dir, "Output directory")->capture_default_str();

  auto* eval_command = app.add_subcommand("eval", "Evaluate a policy over seeded games");
  eval_command
      ->add_option("--policy", policy_source,
                   "Policy file, 'handcoded', or 'random-baseline'")
      ->required();
  eval_command->add_option("--games", games, "Number of games")->capture_default_str();
  eval_command->add_option("--seed", seed, "Master seed")->capture_default_str();
  eval_command->add_option("--maze", maze_path, "Maze file (default: bundled)");
  eval_command->add_option("--tick-limit", tick_limit, "Ticks per game")
      ->capture_default_str();
  eval_command->add_option("--out", out_dir, "Write a run directory for `report`");
  eval_command->add_option("--condition", condition, "Condition label for the report");

  auto* play_command = app.add_subcommand("play", "Interactive keyboard game");
  play_command->add_option("--maze", maze_path, "Maze file (default: bundled)");
  play_command->add_option("--seed", seed, "Master seed")->capture_default_str();
  play_command->add_option("--tick-rate", tick_rate, "Ticks per second")
      ->capture_default_str();
  play_command->add_option("--tick-limit", tick_limit, "Maximum ticks")
      ->capture_default_str();
  play_command->add_option("--trace", trace_path, "Write the game trace here");
  play_command->add_option("--out", out_dir, "Write a run directory for `report`");

  auto* watch_command = app.add_subcommand("watch", "Render an agent game live");
  watch_command
      ->add_option("--policy", policy_source,
                   "Policy file, 'handcoded', or 'random-baseline'")
      ->required();
  watch_command->add_option("--seed", seed, "Master seed")->capture_default_str();
  watch_command->add_option("--maze", maze_path, "Maze file (default: bundled)");
  watch_command->add_option("--tick-rate", tick_rate, "Ticks per second")
      ->capture_default_str();
  watch_command->add_option("--tick-limit", tick_limit, "Maximum ticks")
      ->capture_default_str();
  watch_command->add_option("--trace", trace_path, "Write the game trace here");

  auto* replay_command = app.add_subcommand("replay", "Play back a recorded trace");
  replay_command->add_option("--trace", trace_path, "Trace file")->required();
  replay_command
      ->add_option("--speed", speed,
                   "Frames/second; 0 = step per keypress; negative = dump")
      ->capture_default_str();

  auto* report_command = app.add_subcommand("report", "Aggregate run directories");
  report_command->add_option("--dir", out_dir, "Directory of run subdirectories")
      ->required();
  report_command->add_option("--csv", csv_path, "Also write the table as CSV");

  CLI11_PARSE(app, argc, argv);

  try {
    if (train_command->parsed()) return run_train(config_path, out_dir);
    if (eval_command->parsed()) {
      std::string eval_out = eval_command->count("--out") ? out_dir : "";
      return run_eval(policy_source, games, seed, maze_path, tick_limit, eval_out,
                      condition);
    }
    if (play_command->parsed()) {
      std::string play_out = play_command->count("--out") ? out_dir : "";
      return run_play(maze_path, seed, tick_rate, tick_limit, trace_path, play_out);
    }
    if (watch_command->parsed()) {
      return run_watch(policy_source, seed, maze_path, tick_rate, tick_limit,
                       trace_path);
    }
    if (replay_command->parsed()) return run_replay(trace_path, speed);
    if (report_command->parsed()) return run_report(out_dir, csv_path);
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 1;
  }
  return 0;
}
