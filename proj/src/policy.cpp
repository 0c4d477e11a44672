#include "pacrl/policy.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace pacrl {

void RulePolicy::add(int priority, Rule rule) {
  if (priority < 1 || priority > 3)
    throw std::invalid_argument("rule priority must be in 1..3");
  auto pos = std::find_if(rules.begin(), rules.end(),
                          [&](const PrioritizedRule& r) { return r.priority > priority; });
  rules.insert(pos, PrioritizedRule{priority, std::move(rule)});
}

bool eval_condition(const Condition& condition, const ObservationVector& obs,
                    const ModuleActivations& activations) {
  for (const ConditionAtom& atom : condition.atoms) {
    const bool holds = std::visit(
        [&](const auto& a) -> bool {
          using T = std::decay_t<decltype(a)>;
          if constexpr (std::is_same_v<T, ObsGreater>) return obs[a.obs] > a.threshold;
          if constexpr (std::is_same_v<T, ObsLess>) return obs[a.obs] < a.threshold;
          if constexpr (std::is_same_v<T, ModuleOn>) return activations.on(a.module);
          if constexpr (std::is_same_v<T, ModuleOff>) return !activations.on(a.module);
        },
        atom);
    if (!holds) return false;
  }
  return true;
}

std::optional<Decision> decide(const RulePolicy& policy, const ObservationVector& obs,
                               const ModuleActivations& activations) {
  for (std::size_t i = 0; i < policy.rules.size(); ++i) {
    const PrioritizedRule& r = policy.rules[i];
    if (eval_condition(r.rule.condition, obs, activations))
      return Decision{r.rule.effect, r.priority, static_cast<int>(i)};
  }
  return std::nullopt;
}

void apply_effect(ModuleActivations& activations, const Effect& effect, int firing_priority) {
  if (effect.switch_on)
    activations.switch_on(effect.module, firing_priority);
  else
    activations.switch_off(effect.module);
}

namespace {

std::string format_threshold(double v) {
  if (v == std::floor(v) && std::abs(v) < 1e15) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.0f", v);
    return buf;
  }
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

void skip_spaces(std::string_view text, std::size_t& pos) {
  while (pos < text.size() && text[pos] == ' ') ++pos;
}

bool consume(std::string_view text, std::size_t& pos, std::string_view token) {
  if (text.substr(pos, token.size()) == token) {
    pos += token.size();
    return true;
  }
  return false;
}

std::string read_word(std::string_view text, std::size_t& pos) {
  std::size_t start = pos;
  while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) != 0))
    ++pos;
  return std::string(text.substr(start, pos - start));
}

ConditionAtom parse_atom(std::string_view text, std::size_t& pos) {
  const std::string name = read_word(text, pos);
  if (name.empty()) throw PolicyParseError("expected a name inside condition");
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    const bool on = text[pos] == '+';
    ++pos;
    const auto module = module_from_name(name);
    if (!module) throw PolicyParseError("unknown module name: " + name);
    if (on) return ModuleOn{*module};
    return ModuleOff{*module};
  }
  if (pos >= text.size() || (text[pos] != '<' && text[pos] != '>'))
    throw PolicyParseError("expected <, >, + or - after name: " + name);
  const bool less = text[pos] == '<';
  ++pos;
  const auto obs = obs_from_name(name);
  if (!obs) throw PolicyParseError("unknown observation name: " + name);
  std::size_t consumed = 0;
  double value;
  try {
    value = std::stod(std::string(text.substr(pos)), &consumed);
  } catch (const std::exception&) {
    throw PolicyParseError("malformed threshold after " + name);
  }
  pos += consumed;
  if (less) return ObsLess{*obs, value};
  return ObsGreater{*obs, value};
}

}  // namespace

PrioritizedRule parse_rule(std::string_view text) {
  std::size_t pos = 0;
  skip_spaces(text, pos);
  if (!consume(text, pos, "[")) throw PolicyParseError("rule must start with [priority]");
  const std::string prio_text = read_word(text, pos);
  if (prio_text.size() != 1 || prio_text[0] < '1' || prio_text[0] > '3')
    throw PolicyParseError("malformed priority: [" + prio_text + "] (must be 1..3)");
  const int priority = prio_text[0] - '0';
  if (!consume(text, pos, "]")) throw PolicyParseError("missing ] after priority");
  skip_spaces(text, pos);
  consume(text, pos, ":");
  skip_spaces(text, pos);
  if (!consume(text, pos, "if")) throw PolicyParseError("missing 'if'");

  Condition condition;
  while (true) {
    skip_spaces(text, pos);
    if (!consume(text, pos, "(")) throw PolicyParseError("expected ( before condition atom");
    condition.atoms.push_back(parse_atom(text, pos));
    if (!consume(text, pos, ")")) throw PolicyParseError("expected ) after condition atom");
    skip_spaces(text, pos);
    if (consume(text, pos, "and")) continue;
    break;
  }
  if (condition.atoms.size() > 3)
    throw PolicyParseError("conditions are limited to 3 atoms, got " +
                           std::to_string(condition.atoms.size()));

  if (!consume(text, pos, "then")) throw PolicyParseError("missing 'then'");
  skip_spaces(text, pos);
  const std::string module_text = read_word(text, pos);
  const auto module = module_from_name(module_text);
  if (!module) throw PolicyParseError("unknown module name: " + module_text);
  if (pos >= text.size() || (text[pos] != '+' && text[pos] != '-'))
    throw PolicyParseError("effect must end with + or -");
  const bool on = text[pos] == '+';
  ++pos;
  skip_spaces(text, pos);
  if (pos != text.size()) throw PolicyParseError("trailing text after rule");
  return PrioritizedRule{priority, Rule{std::move(condition), Effect{*module, on}}};
}

std::string format_rule(const PrioritizedRule& rule) {
  std::string out = "[" + std::to_string(rule.priority) + "]: if ";
  bool first = true;
  for (const ConditionAtom& atom : rule.rule.condition.atoms) {
    if (!first) out += " and ";
    first = false;
    out += "(";
    std::visit(
        [&](const auto& a) {
          using T = std::decay_t<decltype(a)>;
          if constexpr (std::is_same_v<T, ObsGreater>)
            out += std::string(obs_name(a.obs)) + ">" + format_threshold(a.threshold);
          if constexpr (std::is_same_v<T, ObsLess>)
            out += std::string(obs_name(a.obs)) + "<" + format_threshold(a.threshold);
          if constexpr (std::is_same_v<T, ModuleOn>) out += std::string(module_name(a.module)) + "+";
          if constexpr (std::is_same_v<T, ModuleOff>)
            out += std::string(module_name(a.module)) + "-";
        },
        atom);
    out += ")";
  }
  out += " then ";
  out += module_name(rule.rule.effect.module);
  out += rule.rule.effect.switch_on ? '+' : '-';
  return out;
}

RulePolicy parse_policy(std::string_view text) {
  RulePolicy policy;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    const std::size_t hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    std::size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string_view::npos) continue;
    std::size_t b = line.find_last_not_of(" \t\r");
    try {
      const PrioritizedRule rule = parse_rule(line.substr(a, b - a + 1));
      policy.add(rule.priority, rule.rule);
    } catch (const PolicyParseError& e) {
      throw PolicyParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
    if (end == text.size()) break;
  }
  return policy;
}

std::string format_policy(const RulePolicy& policy) {
  std::string out;
  for (const PrioritizedRule& r : policy.rules) {
    out += format_rule(r);
    out += '\n';
  }
  return out;
}

RulePolicy load_policy_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open policy file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_policy(buffer.str());
}

void save_policy_file(const std::string& path, const RulePolicy& policy) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write policy file: " + path);
  out << format_policy(policy);
}

Dir control_tick(const RulePolicy& policy, const GameState& state,
                 ModuleActivations& activations, Rng& rng, std::optional<Decision>* fired) {
  const Perception perception = perceive(state);
  const std::optional<Decision> decision = decide(policy, perception.obs, activations);
  if (decision) apply_effect(activations, decision->effect, decision->priority);
  if (fired) *fired = decision;
  return arbitrate(activations, state, perception, rng);
}

Dir PolicyController::choose(const GameState& state) {
  std::optional<Decision> fired;
  const Dir dir = control_tick(policy_, state, activations_, rng_, &fired);
  if (fired) fired_rules_.insert(fired->rule_index);
  return dir;
}

void PolicyController::on_life_lost(const GameState&) { activations_.clear(); }

}  // namespace pacrl
