// Grounding by forward chaining, and enumeration of minimal consistent
// derivation schemas.
#pragma once

#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bbgp/literal.hpp"
#include "bbgp/theory.hpp"

namespace bbgp {

struct GroundRule {
  std::string origin;
  RuleKind kind = RuleKind::standard;
  Strength strength = Strength::strict;
  std::vector<Literal> body;
  Literal head;
  Substitution substitution;

  friend bool operator==(const GroundRule& a, const GroundRule& b) {
    return a.origin == b.origin && a.head == b.head && a.body == b.body;
  }
  friend std::strong_ordering operator<=>(const GroundRule& a, const GroundRule& b);
};

std::string to_string(const GroundRule& r);

/// One entry of a schema: a fact (no rule) or the application of a ground rule.
struct Step {
  Literal literal;
  std::optional<GroundRule> rule;

  bool is_fact() const { return !rule.has_value(); }
  friend bool operator==(const Step&, const Step&) = default;
};

/// A derivation schema. Steps are kept in canonical topological order:
/// dependencies first, ties broken by literal text, target last.
class DerivationSchema {
 public:
  DerivationSchema() = default;
  explicit DerivationSchema(std::vector<Step> steps) : steps_(std::move(steps)) {}

  const std::vector<Step>& steps() const { return steps_; }
  const Literal& target() const { return steps_.back().literal; }
  /// The step that concludes the target.
  const Step& last() const { return steps_.back(); }
  bool empty() const { return steps_.empty(); }

  std::set<Literal> seq() const;
  std::set<Literal> facts() const;
  std::set<GroundRule> strict() const;
  std::set<GroundRule> defeasible() const;

  bool is_consistent() const;

  /// Identity is the (FACTS, STRICT, DEFE) triple; step order does not matter.
  friend bool operator==(const DerivationSchema& a, const DerivationSchema& b) {
    return a.facts() == b.facts() && a.strict() == b.strict() && a.defeasible() == b.defeasible();
  }

 private:
  std::vector<Step> steps_;
};

std::string to_string(const DerivationSchema& schema);

/// True when `sub`'s FACTS, STRICT and DEFE sets are each contained in `super`'s.
bool is_sub_schema(const DerivationSchema& sub, const DerivationSchema& super);

/// Exhaustive forward-chaining closure. A ground instance is produced iff every
/// body literal is a fact or the head of another produced instance. Only rules
/// of the listed kinds take part.
std::vector<GroundRule> ground(const Theory& theory);
std::vector<GroundRule> ground(const Theory& theory, const std::set<RuleKind>& kinds);

/// Enumerates derivation schemas over a fixed set of facts and ground rules.
class Deriver {
 public:
  Deriver(std::set<Literal> facts, std::vector<GroundRule> rules);
  Deriver(const Theory& theory, const std::set<RuleKind>& kinds);

  /// Every literal that is a fact or the head of a ground rule.
  std::set<Literal> derivable() const;

  /// Exactly the minimal, consistent schemas for `target`, sorted by their text.
  std::vector<DerivationSchema> derive_all(const Literal& target) const;

  const std::vector<GroundRule>& rules() const { return rules_; }

 private:
  using Partial = std::map<Literal, std::optional<GroundRule>>;

  std::vector<Partial> expand(const Literal& lit, std::set<Literal>& visiting) const;

  std::set<Literal> facts_;
  std::vector<GroundRule> rules_;
  std::map<Literal, std::vector<const GroundRule*>> by_head_;
};

/// Convenience over all rule kinds.
std::vector<DerivationSchema> derive_all(const Theory& theory, const Literal& target);

/// Every rule kind.
const std::set<RuleKind>& all_rule_kinds();

}  // namespace bbgp
