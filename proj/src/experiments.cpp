#include "pacrl/experiments.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "pacrl/data.hpp"

namespace pacrl {

namespace fs = std::filesystem;

SlotModel SlotModel::uniform(int slots, int rule_choices) {
  if (slots < 1 || rule_choices < 1) {
    throw std::invalid_argument("slot model needs at least one slot and one rule");
  }
  SlotModel model;
  model.slot_priority.resize(slots);
  for (int i = 0; i < slots; ++i) {
    model.slot_priority[i] = 1 + (3 * i) / slots;
  }
  model.p.assign(slots, 0.5);
  model.q.assign(slots, std::vector<double>(rule_choices, 1.0 / rule_choices));
  return model;
}

namespace {

Rule rule_from_text(std::string_view text) {
  // The rulebase stores bare rules; reuse the policy grammar with a dummy
  // priority prefix.
  return parse_rule("[1]: " + std::string(text)).rule;
}

}  // namespace

Rulebase handcoded_rulebase() {
  static const char* const kRules[] = {
      // The nine rules of the bundled hand-written policy.
      "if (NearestGhost<4) then FromGhost+",
      "if (NearestGhost>7) and (MaxJunctionSafety>4) then FromGhost-",
      "if (NearestEdGhost>99) then ToEdGhost-",
      "if (NearestEdGhost<99) then ToEdGhost+",
      "if (Constant>0) then KeepDirection+",
      "if (FromPowerDot-) then ToPowerDot+",
      "if (GhostDensity<1.5) and (NearestPowerDot<5) then FromPowerDot+",
      "if (NearestEdGhost>99) then FromPowerDot-",
      "if (NearestPowerDot>10) then FromPowerDot-",
      // Dot collection.
      "if (Constant>0) then ToDot+",
      "if (NearestGhost<5) then ToDot-",
      "if (NearestGhost>8) then ToDot+",
      "if (NearestEdGhost<99) then ToDot-",
      "if (NearestGhost<4) and (NearestEdGhost>99) then ToDot-",
      "if (NearestDot<2) and (NearestGhost>4) then ToDot+",
      "if (DotCenterDist>10) and (NearestDot>5) then ToDot+",
      // Ghost avoidance and junction play.
      "if (MaxJunctionSafety<2) then ToSafeJunction+",
      "if (MaxJunctionSafety>4) then ToSafeJunction-",
      "if (NearestGhost<4) then ToSafeJunction+",
      "if (NearestGhost>10) then FromGhost-",
      "if (NearestEdGhost<99) then FromGhost-",
      "if (MaxJunctionSafety<2) and (NearestGhost<5) then FromGhost+",
      "if (NearestGhost<7) and (NearestEdGhost>99) then ToGhostFreeArea+",
      "if (NearestGhost>10) then ToGhostFreeArea-",
      // Ghost-density and center-of-mass shaping.
      "if (GhostDensity>1.5) then FromGhostCenter+",
      "if (GhostDensity<0.5) then FromGhostCenter-",
      "if (GhostCenterDist<8) then FromGhostCenter+",
      "if (GhostCenterDist>10) then FromGhostCenter-",
      "if (GhostDensity>2) then ToLowerGhostDensity+",
      "if (GhostDensity<1) then ToLowerGhostDensity-",
      "if (GhostDensity>1) and (NearestDot>4) then ToLowerGhostDensity+",
      // Hunting edible ghosts.
      "if (NearestEdGhost<8) then ToEdGhost+",
      "if (NearestEdGhost>10) then ToEdGhost-",
      // Power-dot timing.
      "if (NearestPowerDot<5) and (NearestGhost<5) then ToPowerDot+",
      "if (NearestPowerDot>10) then ToPowerDot-",
      "if (GhostDensity>1.5) and (NearestPowerDot<7) then ToPowerDot+",
      "if (NearestPowerDot<2) and (NearestEdGhost>99) then ToPowerDot+",
      // Momentum.
      "if (NearestGhost<2) then KeepDirection-",
      "if (NearestGhost>7) then KeepDirection+",
      "if (NearestDot>7) then KeepDirection-",
  };
  Rulebase base;
  base.rules.reserve(std::size(kRules));
  for (const char* text : kRules) {
    base.rules.push_back(rule_from_text(text));
  }
  return base;
}

SlotRuleTable shared_rule_table(const Rulebase& base, int slots) {
  if (base.rules.empty()) throw std::invalid_argument("empty rulebase");
  return SlotRuleTable(slots, base.rules);
}

namespace {

// Threshold grid per observation for randomly generated comparisons:
// whole distances 1..15 (plus 99 where the observation can be infinite)
// and quarter steps on [0,4] for GhostDensity.
std::vector<double> threshold_grid(ObsId obs) {
  switch (obs) {
    case ObsId::Constant:
      return {0.0};
    case ObsId::GhostDensity: {
      std::vector<double> grid;
      for (int i = 0; i <= 16; ++i) grid.push_back(0.25 * i);
      return grid;
    }
    case ObsId::NearestDot:
    case ObsId::NearestPowerDot:
    case ObsId::NearestGhost:
    case ObsId::NearestEdGhost: {
      std::vector<double> grid;
      for (int i = 1; i <= 15; ++i) grid.push_back(i);
      grid.push_back(99.0);
      return grid;
    }
    default: {
      std::vector<double> grid;
      for (int i = 1; i <= 15; ++i) grid.push_back(i);
      return grid;
    }
  }
}

ConditionAtom random_atom(Rng& rng) {
  if (rng.uniform_int(2) == 0) {
    auto obs = static_cast<ObsId>(rng.uniform_int(kObservationCount));
    const std::vector<double> grid = threshold_grid(obs);
    double threshold = grid[rng.uniform_int(static_cast<int>(grid.size()))];
    if (rng.uniform_int(2) == 0) return ObsGreater{obs, threshold};
    return ObsLess{obs, threshold};
  }
  auto module = static_cast<ModuleId>(rng.uniform_int(kModuleCount));
  if (rng.uniform_int(2) == 0) return ModuleOn{module};
  return ModuleOff{module};
}

}  // namespace

Rule random_rule(Rng& rng) {
  Rule rule;
  int atoms = 1 + static_cast<int>(rng.uniform_int(3));
  rule.condition.atoms.reserve(atoms);
  for (int i = 0; i < atoms; ++i) {
    rule.condition.atoms.push_back(random_atom(rng));
  }
  rule.effect.module = static_cast<ModuleId>(rng.uniform_int(kModuleCount));
  rule.effect.switch_on = rng.uniform_int(2) == 0;
  return rule;
}

SlotRuleTable random_rule_table(int slots, int rules_per_slot, Rng& rng) {
  if (slots < 1 || rules_per_slot < 1) {
    throw std::invalid_argument("random rule table needs positive dimensions");
  }
  SlotRuleTable table(slots);
  for (auto& row : table) {
    row.reserve(rules_per_slot);
    for (int k = 0; k < rules_per_slot; ++k) {
      row.push_back(random_rule(rng));
    }
  }
  return table;
}

PolicyDraw sample_draw(const SlotModel& model, Rng& rng) {
  const int m = model.slots();
  PolicyDraw draw;
  draw.fill.resize(m);
  draw.choice.resize(m);
  for (int i = 0; i < m; ++i) {
    draw.fill[i] = rng.bernoulli(model.p[i]) ? 1 : 0;
    // The rule symbol is drawn whether or not the slot is filled, so the
    // update can count symbol frequencies over every elite sample.
    double u = rng.uniform01();
    double cumulative = 0.0;
    int pick = static_cast<int>(model.q[i].size()) - 1;
    for (int k = 0; k < static_cast<int>(model.q[i].size()); ++k) {
      cumulative += model.q[i][k];
      if (u < cumulative) {
        pick = k;
        break;
      }
    }
    draw.choice[i] = pick;
  }
  return draw;
}

RulePolicy materialize(const SlotModel& model, const SlotRuleTable& rules,
                       const PolicyDraw& draw) {
  RulePolicy policy;
  for (int i = 0; i < model.slots(); ++i) {
    if (draw.fill[i]) {
      policy.add(model.slot_priority[i], rules[i][draw.choice[i]]);
    }
  }
  return policy;
}

RulePolicy sample_policy(const SlotModel& model, const SlotRuleTable& rules, Rng& rng) {
  return materialize(model, rules, sample_draw(model, rng));
}

RulePolicy deterministic_policy(const SlotModel& model, const SlotRuleTable& rules) {
  PolicyDraw draw;
  draw.fill.resize(model.slots());
  draw.choice.resize(model.slots());
  for (int i = 0; i < model.slots(); ++i) {
    draw.fill[i] = model.p[i] > 0.5 ? 1 : 0;
    const auto& row = model.q[i];
    draw.choice[i] = static_cast<int>(
        std::max_element(row.begin(), row.end()) - row.begin());
  }
  return materialize(model, rules, draw);
}

bool model_converged(const SlotModel& model) {
  for (int i = 0; i < model.slots(); ++i) {
    double p = model.p[i];
    if (std::min(p, 1.0 - p) > kConvergenceTolerance) return false;
    if (p > 0.5) {
      double top = *std::max_element(model.q[i].begin(), model.q[i].end());
      if (1.0 - top > kConvergenceTolerance) return false;
    }
  }
  return true;
}

EvaluationResult evaluate_policy(const RulePolicy& policy, int games,
                                 const Maze& maze, long tick_limit,
                                 std::uint64_t seed, const GameConfig& config,
                                 int threads) {
  if (games < 1) throw std::invalid_argument("evaluate_policy: games must be >= 1");
  EvaluationResult result;
  result.scores.resize(games);
  std::vector<std::set<int>> fired(games);

  auto run_game = [&](int g) {
    std::uint64_t game_seed = derive_seed(seed, static_cast<std::uint64_t>(g));
    PolicyController controller(policy, game_seed);
    EpisodeResult episode = play_episode(maze, controller, game_seed, tick_limit, config);
    result.scores[g] = episode.final_score;
    fired[g] = controller.fired_rules();
  };

  if (threads <= 1 || games == 1) {
    for (int g = 0; g < games; ++g) run_game(g);
  } else {
    int workers = std::min(threads, games);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (int g = w; g < games; g += workers) run_game(g);
      });
    }
    for (auto& t : pool) t.join();
  }

  for (const auto& set : fired) {
    result.fired_rules.insert(set.begin(), set.end());
  }
  result.mean_score =
      std::accumulate(result.scores.begin(), result.scores.end(), 0.0) / games;
  return result;
}

void ExperimentConfig::validate() const {
  auto fail = [](const std::string& what) { throw std::invalid_argument(what); };
  if (rulebase != "handcoded" && rulebase != "random") {
    fail("rulebase must be 'handcoded' or 'random', got '" + rulebase + "'");
  }
  if (slots < 1) fail("slots must be positive");
  if (rules_per_slot < 1) fail("rules_per_slot must be positive");
  if (population < 1) fail("population must be positive");
  if (rho <= 0.0 || rho > 1.0) fail("rho must lie in (0,1]");
  if (rho * population < 1.0) fail("rho*population must be at least 1");
  if (alpha <= 0.0 || alpha > 1.0) fail("alpha must lie in (0,1]");
  if (beta <= 0.0 || beta > 1.0) fail("beta must lie in (0,1]");
  if (iterations < 1) fail("iterations must be positive");
  if (games_per_evaluation < 1) fail("games_per_evaluation must be positive");
  if (test_games < 1) fail("test_games must be positive");
  if (parallel_runs < 1) fail("parallel_runs must be positive");
  if (tick_limit < 1) fail("tick_limit must be positive");
  if (threads < 0) fail("threads must be nonnegative");
}

ExperimentConfig ExperimentConfig::from_text(std::string_view text) {
  ExperimentConfig config;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto is_space = [](unsigned char c) { return std::isspace(c) != 0; };
    line.erase(line.begin(), std::find_if_not(line.begin(), line.end(), is_space));
    while (!line.empty() && is_space(line.back())) line.pop_back();
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config line " + std::to_string(line_number) +
                                  ": expected key=value, got '" + line + "'");
    }
    std::string key = line.substr(0, eq);
    std::string value = line.substr(eq + 1);
    while (!key.empty() && is_space(key.back())) key.pop_back();
    value.erase(value.begin(), std::find_if_not(value.begin(), value.end(), is_space));
    try {
      if (key == "rulebase") config.rulebase = value;
      else if (key == "slots") config.slots = std::stoi(value);
      else if (key == "rules_per_slot") config.rules_per_slot = std::stoi(value);
      else if (key == "population") config.population = std::stoi(value);
      else if (key == "rho") config.rho = std::stod(value);
      else if (key == "alpha") config.alpha = std::stod(value);
      else if (key == "beta") config.beta = std::stod(value);
      else if (key == "iterations") config.iterations = std::stoi(value);
      else if (key == "games_per_evaluation") config.games_per_evaluation = std::stoi(value);
      else if (key == "test_games") config.test_games = std::stoi(value);
      else if (key == "parallel_runs") config.parallel_runs = std::stoi(value);
      else if (key == "tick_limit") config.tick_limit = std::stol(value);
      else if (key == "maze") config.maze_path = value;
      else if (key == "seed") config.seed = std::stoull(value);
      else if (key == "threads") config.threads = std::stoi(value);
      else if (key == "edible_ticks") config.game.edible_ticks = std::stoi(value);
      else if (key == "pen_delay") config.game.pen_delay = std::stoi(value);
      else if (key == "extra_life_score") config.game.extra_life_score = std::stoi(value);
      else {
        throw std::invalid_argument("config line " + std::to_string(line_number) +
                                    ": unknown key '" + key + "'");
      }
    } catch (const std::invalid_argument&) {
      throw;
    } catch (const std::exception&) {
      throw std::invalid_argument("config line " + std::to_string(line_number) +
                                  ": bad value '" + value + "' for key '" + key + "'");
    }
  }
  config.validate();
  return config;
}

ExperimentConfig ExperimentConfig::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return from_text(buffer.str());
}

std::string ExperimentConfig::to_text() const {
  std::ostringstream out;
  out << "rulebase=" << rulebase << "\n"
      << "slots=" << slots << "\n"
      << "rules_per_slot=" << rules_per_slot << "\n"
      << "population=" << population << "\n"
      << "rho=" << rho << "\n"
      << "alpha=" << alpha << "\n"
      << "beta=" << beta << "\n"
      << "iterations=" << iterations << "\n"
      << "games_per_evaluation=" << games_per_evaluation << "\n"
      << "test_games=" << test_games << "\n"
      << "parallel_runs=" << parallel_runs << "\n"
      << "tick_limit=" << tick_limit << "\n"
      << "maze=" << maze_path << "\n"
      << "seed=" << seed << "\n"
      << "threads=" << threads << "\n"
      << "edible_ticks=" << game.edible_ticks << "\n"
      << "pen_delay=" << game.pen_delay << "\n"
      << "extra_life_score=" << game.extra_life_score << "\n";
  return out.str();
}

Maze load_experiment_maze(const ExperimentConfig& config) {
  if (config.maze_path.empty()) {
    return Maze::parse(default_maze_text());
  }
  std::ifstream in(config.maze_path);
  if (!in) throw std::runtime_error("cannot open maze file: " + config.maze_path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return Maze::parse(buffer.str());
}

RunRecord train(const ExperimentConfig& config, const Maze& maze) {
  config.validate();

  SlotRuleTable table;
  int rule_choices = 0;
  if (config.rulebase == "handcoded") {
    Rulebase base = handcoded_rulebase();
    rule_choices = base.size();
    table = shared_rule_table(base, config.slots);
  } else {
    Rng table_rng(derive_seed(config.seed, 0xB45E));
    rule_choices = config.rules_per_slot;
    table = random_rule_table(config.slots, rule_choices, table_rng);
  }

  SlotModel model = SlotModel::uniform(config.slots, rule_choices);

  CeCallbacks<PolicyDraw> callbacks;
  callbacks.sample = [&](Rng& rng) { return sample_draw(model, rng); };
  callbacks.evaluate = [&](const PolicyDraw& draw, std::uint64_t eval_seed) {
    RulePolicy policy = materialize(model, table, draw);
    return evaluate_policy(policy, config.games_per_evaluation, maze,
                           config.tick_limit, eval_seed, config.game)
        .mean_score;
  };
  callbacks.update = [&](const std::vector<PolicyDraw>& population,
                         const EliteSelection& elite) {
    std::vector<std::vector<std::uint8_t>> elite_bits;
    std::vector<std::vector<int>> elite_symbols;
    elite_bits.reserve(elite.indices.size());
    elite_symbols.reserve(elite.indices.size());
    for (int index : elite.indices) {
      elite_bits.push_back(population[index].fill);
      elite_symbols.push_back(population[index].choice);
    }
    BernoulliVector p_new = bernoulli_update(elite_bits);
    CategoricalMatrix q_new = categorical_update(elite_symbols, rule_choices);
    model.p = blend(model.p, p_new, config.alpha);
    model.q = blend(model.q, q_new, config.alpha);
    decay_slot_probabilities(model.p, config.beta);
  };
  callbacks.stop = [&] { return model_converged(model); };

  CeOptions options;
  options.population = config.population;
  options.rho = config.rho;
  options.iterations = config.iterations;
  options.seed = config.seed;
  options.threads = config.threads == 0
                        ? static_cast<int>(std::thread::hardware_concurrency())
                        : config.threads;

  CeResult<PolicyDraw> ce = ce_optimize(callbacks, options);

  RunRecord record;
  record.config = config;
  record.history = ce.history;
  record.final_model = model;
  record.converged = model_converged(model);
  record.best_sampled = materialize(model, table, ce.best);
  record.best_sampled_value = ce.best_value;
  record.learned = record.converged ? deterministic_policy(model, table)
                                    : record.best_sampled;

  EvaluationResult test =
      evaluate_policy(record.learned, config.test_games, maze, config.tick_limit,
                      derive_seed(config.seed, 0x7E57), config.game,
                      options.threads);
  record.test_scores = test.scores;
  record.test_mean = test.mean_score;
  record.test_high = *std::max_element(test.scores.begin(), test.scores.end());
  record.effective_rule_count = static_cast<int>(test.fired_rules.size());
  return record;
}

RulePolicy baseline_random_policy(const Rulebase& base, Rng& rng) {
  constexpr int kPolicyRules = 10;
  if (base.size() < kPolicyRules) {
    throw std::invalid_argument("rulebase smaller than 10 rules");
  }
  // Partial Fisher-Yates: the first 10 entries are a uniform draw without
  // replacement.
  std::vector<int> indices(base.size());
  std::iota(indices.begin(), indices.end(), 0);
  RulePolicy policy;
  for (int i = 0; i < kPolicyRules; ++i) {
    int j = i + static_cast<int>(rng.uniform_int(base.size() - i));
    std::swap(indices[i], indices[j]);
    int priority = 1 + static_cast<int>(rng.uniform_int(3));
    policy.add(priority, base.rules[indices[i]]);
  }
  return policy;
}

namespace {

void write_text_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path.string());
  out << text;
}

}  // namespace

void write_run_record(const std::string& dir, const std::string& condition,
                      const RunRecord& record) {
  fs::create_directories(dir);
  fs::path base(dir);
  write_text_file(base / "config.txt", record.config.to_text());
  write_text_file(base / "ce_log.csv", ce_log_csv(record.history));
  write_text_file(base / "learned.rules", format_policy(record.learned));
  write_text_file(base / "best_sampled.rules", format_policy(record.best_sampled));

  std::ostringstream scores;
  scores << "game,score\n";
  for (std::size_t g = 0; g < record.test_scores.size(); ++g) {
    scores << g << "," << record.test_scores[g] << "\n";
  }
  write_text_file(base / "test_scores.csv", scores.str());

  RunSummary summary;
  summary.condition = condition;
  summary.mean = record.test_mean;
  summary.high = record.test_high;
  summary.rule_count = record.effective_rule_count;
  summary.games = static_cast<int>(record.test_scores.size());
  write_summary((base / "summary.csv").string(), summary);
}

void write_summary(const std::string& path, const RunSummary& summary) {
  char mean_buffer[64];
  std::snprintf(mean_buffer, sizeof mean_buffer, "%.6f", summary.mean);
  std::ostringstream out;
  out << "condition," << summary.condition << "\n"
      << "mean," << mean_buffer << "\n"
      << "high," << summary.high << "\n"
      << "rule_count," << summary.rule_count << "\n"
      << "games," << summary.games << "\n";
  write_text_file(path, out.str());
}

RunSummary read_summary(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open summary file: " + path);
  RunSummary summary;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw std::runtime_error(path + ":" + std::to_string(line_number) +
                               ": expected key,value");
    }
    std::string key = line.substr(0, comma);
    std::string value = line.substr(comma + 1);
    try {
      if (key == "condition") summary.condition = value;
      else if (key == "mean") summary.mean = std::stod(value);
      else if (key == "high") summary.high = std::stoi(value);
      else if (key == "rule_count") summary.rule_count = std::stoi(value);
      else if (key == "games") summary.games = std::stoi(value);
      else {
        throw std::runtime_error(path + ":" + std::to_string(line_number) +
                                 ": unknown key '" + key + "'");
      }
    } catch (const std::runtime_error&) {
      throw;
    } catch (const std::exception&) {
      throw std::runtime_error(path + ":" + std::to_string(line_number) +
                               ": bad value '" + value + "'");
    }
  }
  return summary;
}

std::vector<RunSummary> collect_summaries(const std::string& dir) {
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_directory()) continue;
    fs::path summary = entry.path() / "summary.csv";
    if (fs::exists(summary)) files.push_back(summary);
  }
  std::sort(files.begin(), files.end());
  std::vector<RunSummary> summaries;
  summaries.reserve(files.size());
  for (const auto& file : files) {
    summaries.push_back(read_summary(file.string()));
  }
  return summaries;
}

namespace {

// Row order of the results table; unknown conditions sort after these.
const std::vector<std::string> kConditionOrder = {
    "random_ce", "handcoded_ce", "random_rules", "handcoded_policy", "human"};

std::string condition_label(const std::string& condition) {
  if (condition == "random_ce") return "Random rulebase + CE";
  if (condition == "handcoded_ce") return "Hand-coded rulebase + CE";
  if (condition == "random_rules") return "Hand-coded rulebase + random rules";
  if (condition == "handcoded_policy") return "Hand-coded policy";
  if (condition == "human") return "Human play";
  return condition;
}

int condition_rank(const std::string& condition) {
  auto it = std::find(kConditionOrder.begin(), kConditionOrder.end(), condition);
  return static_cast<int>(it - kConditionOrder.begin());
}

}  // namespace

std::vector<ConditionRow> aggregate_report(const std::vector<RunSummary>& summaries) {
  std::map<std::string, std::vector<const RunSummary*>> groups;
  for (const auto& summary : summaries) {
    groups[summary.condition].push_back(&summary);
  }
  std::vector<ConditionRow> rows;
  for (const auto& [condition, group] : groups) {
    ConditionRow row;
    row.condition = condition;
    double score_sum = 0.0;
    double rule_sum = 0.0;
    for (const RunSummary* summary : group) {
      score_sum += summary->mean * summary->games;
      row.games += summary->games;
      row.high = std::max(row.high, summary->high);
      rule_sum += summary->rule_count;
    }
    row.runs = static_cast<int>(group.size());
    row.mean = row.games > 0 ? score_sum / row.games : 0.0;
    row.rule_count = rule_sum / row.runs;
    rows.push_back(row);
  }
  std::sort(rows.begin(), rows.end(), [](const ConditionRow& a, const ConditionRow& b) {
    int ra = condition_rank(a.condition);
    int rb = condition_rank(b.condition);
    if (ra != rb) return ra < rb;
    return a.condition < b.condition;
  });
  return rows;
}

std::string report_text(const std::vector<ConditionRow>& rows) {
  std::ostringstream out;
  out << "Condition                            |   Mean |  High | Rules | Games | Runs\n";
  out << "-------------------------------------+--------+-------+-------+-------+-----\n";
  for (const auto& row : rows) {
    char line[160];
    std::snprintf(line, sizeof line, "%-37s| %6.0f | %5d | %5.1f | %5d | %4d\n",
                  condition_label(row.condition).c_str(), row.mean, row.high,
                  row.rule_count, row.games, row.runs);
    out << line;
  }
  return out.str();
}

std::string report_csv(const std::vector<ConditionRow>& rows) {
  std::ostringstream out;
  out << "condition,mean,high,rule_count,games,runs\n";
  for (const auto& row : rows) {
    char mean_buffer[64];
    std::snprintf(mean_buffer, sizeof mean_buffer, "%.6f", row.mean);
    char rules_buffer[64];
    std::snprintf(rules_buffer, sizeof rules_buffer, "%.3f", row.rule_count);
    out << row.condition << "," << mean_buffer << "," << row.high << ","
        << rules_buffer << "," << row.games << "," << row.runs << "\n";
  }
  return out.str();
}

}  // namespace pacrl
