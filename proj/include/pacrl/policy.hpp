#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pacrl/behaviors.hpp"
#include "pacrl/perception.hpp"

namespace pacrl {

struct ObsGreater {
  ObsId obs;
  double threshold;
  bool operator==(const ObsGreater&) const = default;
};
struct ObsLess {
  ObsId obs;
  double threshold;
  bool operator==(const ObsLess&) const = default;
};
struct ModuleOn {
  ModuleId module;
  bool operator==(const ModuleOn&) const = default;
};
struct ModuleOff {
  ModuleId module;
  bool operator==(const ModuleOff&) const = default;
};

using ConditionAtom = std::variant<ObsGreater, ObsLess, ModuleOn, ModuleOff>;

// Conjunction of 1..3 atoms.
struct Condition {
  std::vector<ConditionAtom> atoms;
  bool operator==(const Condition&) const = default;
};

struct Effect {
  ModuleId module;
  bool switch_on;
  bool operator==(const Effect&) const = default;
};

struct Rule {
  Condition condition;
  Effect effect;
  bool operator==(const Rule&) const = default;
};

struct PrioritizedRule {
  int priority;  // 1..3, 1 checked first
  Rule rule;
  bool operator==(const PrioritizedRule&) const = default;
};

// Decision list: rules checked by ascending priority number, insertion
// order within a level.
struct RulePolicy {
  std::vector<PrioritizedRule> rules;

  // Maintains the sorted-by-priority, stable-within-level invariant.
  void add(int priority, Rule rule);
  bool operator==(const RulePolicy&) const = default;
};

class PolicyParseError : public std::runtime_error {
 public:
  explicit PolicyParseError(const std::string& what) : std::runtime_error(what) {}
};

bool eval_condition(const Condition& condition, const ObservationVector& obs,
                    const ModuleActivations& activations);

struct Decision {
  Effect effect;
  int priority;
  int rule_index;  // index into RulePolicy::rules
};

std::optional<Decision> decide(const RulePolicy& policy, const ObservationVector& obs,
                               const ModuleActivations& activations);

void apply_effect(ModuleActivations& activations, const Effect& effect, int firing_priority);

// Text form: `[p]: if (Atom) and (Atom) then Module+` with atoms
// `Name<value`, `Name>value`, `Module+`, `Module-`.
PrioritizedRule parse_rule(std::string_view text);
std::string format_rule(const PrioritizedRule& rule);

// One rule per line; '#' starts a comment, blank lines ignored.
RulePolicy parse_policy(std::string_view text);
std::string format_policy(const RulePolicy& policy);

RulePolicy load_policy_file(const std::string& path);
void save_policy_file(const std::string& path, const RulePolicy& policy);

// One control step: observe, at most one rule firing, arbitration.
Dir control_tick(const RulePolicy& policy, const GameState& state,
                 ModuleActivations& activations, Rng& rng,
                 std::optional<Decision>* fired = nullptr);

// Episode controller driving the game with a rule policy. Activations
// start all-off and reset after each life loss.
class PolicyController : public Controller {
 public:
  PolicyController(RulePolicy policy, std::uint64_t seed)
      : policy_(std::move(policy)), rng_(derive_seed(seed, 0xA6E7)) {}

  Dir choose(const GameState& state) override;
  void on_life_lost(const GameState& state) override;

  const std::set<int>& fired_rules() const { return fired_rules_; }
  const ModuleActivations& activations() const { return activations_; }

 private:
  RulePolicy policy_;
  ModuleActivations activations_;
  Rng rng_;
  std::set<int> fired_rules_;
};

}  // namespace pacrl
