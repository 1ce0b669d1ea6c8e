// Agent theories: facts, strict/defeasible rules by stage kind, sleeping goals.
#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "bbgp/literal.hpp"

namespace bbgp {

enum class RuleKind { standard, activation, evaluation, deliberation, checking };
enum class Strength { strict, defeasible };

std::string_view to_string(RuleKind kind);
std::string_view to_string(Strength strength);

struct Rule {
  std::string id;
  RuleKind kind = RuleKind::standard;
  Strength strength = Strength::strict;
  std::vector<Literal> body;
  Literal head;

  friend bool operator==(const Rule&, const Rule&) = default;
  friend auto operator<=>(const Rule&, const Rule&) = default;
};

struct Fact {
  std::string id;
  Literal literal;

  friend bool operator==(const Fact&, const Fact&) = default;
  friend auto operator<=>(const Fact&, const Fact&) = default;
};

/// Builtin rule ids. These rules are injected by the parser and never serialized.
inline constexpr std::string_view kBuiltinNoIncompatibility = "r_de1";
inline constexpr std::string_view kBuiltinMostValuable = "r_de2";
inline constexpr std::string_view kBuiltinChecking = "r_ck";

/// The two deliberation rules and the checking rule every theory carries.
std::vector<Rule> builtin_rules();
bool is_builtin(const Rule& rule);

class Theory {
 public:
  /// An empty theory with the builtins present.
  Theory();

  /// Adds a fact unless its literal is already known. Returns false on duplicates.
  bool add_fact(Fact fact);
  void add_rule(Rule rule);
  void add_sleeping_goal(Literal pattern);
  void set_template(const std::string& key, std::string text) { templates_[key] = std::move(text); }
  void add_warning(std::string w) { warnings_.push_back(std::move(w)); }

  const std::vector<Fact>& facts() const { return facts_; }
  const std::vector<Rule>& rules() const { return rules_; }
  const std::vector<Literal>& sleeping_goals() const { return sleeping_goals_; }
  const std::map<std::string, std::string>& templates() const { return templates_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

  const Rule* find_rule(std::string_view id) const;
  const Fact* find_fact(const Literal& lit) const;
  bool has_fact(const Literal& lit) const { return find_fact(lit) != nullptr; }

  std::vector<const Rule*> rules_of(RuleKind kind) const;
  std::vector<const Rule*> rules_of(Strength strength) const;

  /// Returns a copy without the fact whose id or literal text matches `key`.
  Theory without_fact(std::string_view key) const;

  /// Set equality on facts, rules, sleeping goals and templates. Warnings are ignored.
  friend bool operator==(const Theory& a, const Theory& b);

 private:
  std::vector<Fact> facts_;
  std::vector<Rule> rules_;
  std::vector<Literal> sleeping_goals_;
  std::map<std::string, std::string> templates_;
  std::vector<std::string> warnings_;
};

/// Throws ParseError, KindError or RangeError.
Theory parse_theory(std::string_view source);
std::string serialize_theory(const Theory& theory);

/// Reads and parses a theory file. Throws std::runtime_error when unreadable.
Theory load_theory_file(const std::string& path);

}  // namespace bbgp
