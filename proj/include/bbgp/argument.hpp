// Epistemic and stage arguments, sub-arguments, and the attack relation.
#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "bbgp/derivation.hpp"
#include "bbgp/theory.hpp"

namespace bbgp {

/// The four goal-processing stages.
enum class Stage { activation, evaluation, deliberation, checking };

inline constexpr Stage kStages[] = {Stage::activation, Stage::evaluation, Stage::deliberation, Stage::checking};

std::string_view to_string(Stage stage);
/// Short tag: ac, ev, de, ck.
std::string_view tag(Stage stage);
std::optional<Stage> stage_from_tag(std::string_view tag);
RuleKind rule_kind_of(Stage stage);

enum class Category { epistemic, activation, evaluation, deliberation, checking };

std::string_view to_string(Category c);
Category category_of(Stage stage);

struct Argument {
  std::string id;  // content-addressed, e.g. "ep:1f3a9c0d2b4e"
  Category category = Category::epistemic;
  DerivationSchema support;
  Literal claim;
  std::optional<Literal> goal;  // for stage arguments, the goal they concern

  bool is_epistemic() const { return category == Category::epistemic; }
  /// A fact, or concluded by a strict rule.
  bool has_strict_claim() const {
    const Step& s = support.last();
    return s.is_fact() || s.rule->strength == Strength::strict;
  }
};

/// Canonical text of an argument: category, claim and support.
std::string canonical_text(const Argument& a);
std::string make_argument_id(Category category, const std::string& canonical);

/// `chosen('g')` and `executive('g')`.
Literal chosen_literal(const Literal& goal);
Literal executive_literal(const Literal& goal);

/// The literal a stage argument for `goal` must conclude.
Literal stage_claim(Stage stage, const Literal& goal);

/// One argument per minimal consistent schema of every literal derivable from
/// the facts and standard rules. Sorted by id.
std::vector<Argument> build_epistemic(const Theory& theory);

/// Stage arguments for the candidate goals: schemas over the facts, standard
/// rules and this stage's rules whose last step applies a stage rule.
std::vector<Argument> build_stage(const Theory& theory, Stage stage, const std::set<Literal>& candidates);

/// Ground goals produced by activation rules that instantiate a sleeping goal.
std::set<Literal> activation_candidates(const Theory& theory);

/// Every b in `universe` whose FACTS, STRICT and DEFE sets are contained in a's;
/// includes `a` itself when present in the universe.
std::vector<const Argument*> sub_arguments(const Argument& a, const std::vector<Argument>& universe);

enum class Flavor { rebut, undercut };
enum class Relation { ep, mx };

std::string_view to_string(Flavor f);
std::string_view to_string(Relation r);

struct Attack {
  std::string attacker;
  std::string target;
  Flavor flavor = Flavor::undercut;
  Relation relation = Relation::ep;

  friend bool operator==(const Attack& a, const Attack& b) {
    return a.attacker == b.attacker && a.target == b.target;
  }
  friend auto operator<=>(const Attack& a, const Attack& b) {
    if (auto c = a.attacker <=> b.attacker; c != 0) return c;
    return a.target <=> b.target;
  }
};

/// Whether `a` rebuts `b`: both epistemic with complementary claims, unless b's
/// claim is strict (or a fact) while a's is defeasible.
bool rebuts(const Argument& a, const Argument& b);
/// Whether epistemic `a` undercuts `b`: a's claim contradicts a fact of b's
/// support, or, for a stage argument b, any literal of its support.
bool undercuts(const Argument& a, const Argument& b);

/// All attacks among `args`, one per ordered pair, sorted. A pair that both
/// rebuts and undercuts is reported as a rebut.
std::vector<Attack> compute_attacks(const std::vector<Argument>& args);

}  // namespace bbgp
