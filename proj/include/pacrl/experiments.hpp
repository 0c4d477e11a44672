#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "pacrl/cross_entropy.hpp"
#include "pacrl/game.hpp"
#include "pacrl/maze.hpp"
#include "pacrl/policy.hpp"
#include "pacrl/rng.hpp"

namespace pacrl {

// Distribution over decision-list policies: per-slot fill probabilities plus a
// categorical rule choice per slot. Priorities are fixed per slot, evenly
// partitioned over {1,2,3}.
struct SlotModel {
  std::vector<int> slot_priority;
  BernoulliVector p;
  CategoricalMatrix q;

  int slots() const { return static_cast<int>(slot_priority.size()); }
  int rule_choices() const { return q.empty() ? 0 : static_cast<int>(q[0].size()); }

  static SlotModel uniform(int slots, int rule_choices);
};

struct Rulebase {
  std::vector<Rule> rules;

  int size() const { return static_cast<int>(rules.size()); }
};

// The bundled 40-rule base: the 9 hand-coded decision-list rules plus 31
// further rules over the same observation/module vocabulary.
Rulebase handcoded_rulebase();

// rules[i][j] is the rule chosen when slot i picks symbol j.
using SlotRuleTable = std::vector<std::vector<Rule>>;

// Every slot shares the same rulebase.
SlotRuleTable shared_rule_table(const Rulebase& base, int slots);

// Independent random rule per (slot, symbol) pair; fixed for a whole run.
Rule random_rule(Rng& rng);
SlotRuleTable random_rule_table(int slots, int rules_per_slot, Rng& rng);

// One draw from the slot model: fill bits and (always-drawn) rule symbols.
struct PolicyDraw {
  std::vector<std::uint8_t> fill;
  std::vector<int> choice;
};

PolicyDraw sample_draw(const SlotModel& model, Rng& rng);
RulePolicy materialize(const SlotModel& model, const SlotRuleTable& rules,
                       const PolicyDraw& draw);
RulePolicy sample_policy(const SlotModel& model, const SlotRuleTable& rules,
                         Rng& rng);

// Deterministic policy for a converged model (p thresholded at 1/2, argmax q).
RulePolicy deterministic_policy(const SlotModel& model, const SlotRuleTable& rules);

// True when every fill probability is within 1e-6 of 0 or 1 and every filled
// slot's rule choice is within 1e-6 of one-hot.
bool model_converged(const SlotModel& model);

struct EvaluationResult {
  double mean_score = 0.0;
  std::vector<int> scores;
  std::set<int> fired_rules;  // indices into the policy, union over games
};

EvaluationResult evaluate_policy(const RulePolicy& policy, int games,
                                 const Maze& maze, long tick_limit,
                                 std::uint64_t seed,
                                 const GameConfig& config = {}, int threads = 1);

struct ExperimentConfig {
  std::string rulebase = "handcoded";  // "handcoded" or "random"
  int slots = 30;
  int rules_per_slot = 40;  // ignored for "handcoded" (rulebase size wins)
  int population = 100;
  double rho = 0.05;
  double alpha = 0.6;
  double beta = 0.98;
  int iterations = 50;
  int games_per_evaluation = 3;
  int test_games = 50;
  int parallel_runs = 1;
  long tick_limit = 3000;
  std::string maze_path;  // empty = bundled default maze
  std::uint64_t seed = 1;
  int threads = 0;  // 0 = hardware concurrency
  GameConfig game;

  void validate() const;  // throws std::invalid_argument
  static ExperimentConfig from_text(std::string_view text);
  static ExperimentConfig from_file(const std::string& path);
  std::string to_text() const;
};

struct RunRecord {
  ExperimentConfig config;
  std::vector<CeIterationStats> history;
  bool converged = false;
  RulePolicy learned;       // converged policy, else best-of-run
  RulePolicy best_sampled;  // best candidate ever evaluated
  double best_sampled_value = 0.0;
  SlotModel final_model;
  std::vector<int> test_scores;
  double test_mean = 0.0;
  int test_high = 0;
  int effective_rule_count = 0;  // learned-policy rules firing in test games
};

Maze load_experiment_maze(const ExperimentConfig& config);
RunRecord train(const ExperimentConfig& config, const Maze& maze);

// 10 distinct rules drawn without replacement, uniform priorities in {1,2,3}.
RulePolicy baseline_random_policy(const Rulebase& base, Rng& rng);

// Run-directory output: config.txt, ce_log.csv, learned.rules,
// best_sampled.rules, test_scores.csv, summary.csv.
void write_run_record(const std::string& dir, const std::string& condition,
                      const RunRecord& record);

// One summary.csv worth of data; `report` aggregates these per condition.
struct RunSummary {
  std::string condition;
  double mean = 0.0;
  int high = 0;
  int rule_count = 0;
  int games = 0;
};

void write_summary(const std::string& path, const RunSummary& summary);
RunSummary read_summary(const std::string& path);

struct ConditionRow {
  std::string condition;
  double mean = 0.0;
  int high = 0;
  double rule_count = 0.0;
  int games = 0;
  int runs = 0;
};

// Scans immediate subdirectories of `dir` for summary.csv files.
std::vector<RunSummary> collect_summaries(const std::string& dir);
std::vector<ConditionRow> aggregate_report(const std::vector<RunSummary>& summaries);
std::string report_text(const std::vector<ConditionRow>& rows);
std::string report_csv(const std::vector<ConditionRow>& rows);

}  // namespace pacrl
