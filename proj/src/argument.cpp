#include "bbgp/argument.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>

namespace bbgp {

std::string_view to_string(Stage stage) {
  switch (stage) {
    case Stage::activation: return "activation";
    case Stage::evaluation: return "evaluation";
    case Stage::deliberation: return "deliberation";
    case Stage::checking: return "checking";
  }
  return "?";
}

std::string_view tag(Stage stage) {
  switch (stage) {
    case Stage::activation: return "ac";
    case Stage::evaluation: return "ev";
    case Stage::deliberation: return "de";
    case Stage::checking: return "ck";
  }
  return "?";
}

std::optional<Stage> stage_from_tag(std::string_view t) {
  for (Stage s : kStages)
    if (tag(s) == t || to_string(s) == t) return s;
  return std::nullopt;
}

RuleKind rule_kind_of(Stage stage) {
  switch (stage) {
    case Stage::activation: return RuleKind::activation;
    case Stage::evaluation: return RuleKind::evaluation;
    case Stage::deliberation: return RuleKind::deliberation;
    case Stage::checking: return RuleKind::checking;
  }
  return RuleKind::standard;
}

std::string_view to_string(Category c) {
  switch (c) {
    case Category::epistemic: return "epistemic";
    case Category::activation: return "activation";
    case Category::evaluation: return "evaluation";
    case Category::deliberation: return "deliberation";
    case Category::checking: return "checking";
  }
  return "?";
}

Category category_of(Stage stage) {
  switch (stage) {
    case Stage::activation: return Category::activation;
    case Stage::evaluation: return Category::evaluation;
    case Stage::deliberation: return Category::deliberation;
    case Stage::checking: return Category::checking;
  }
  return Category::epistemic;
}

std::string_view to_string(Flavor f) { return f == Flavor::rebut ? "rebut" : "undercut"; }
std::string_view to_string(Relation r) { return r == Relation::ep ? "ep" : "mx"; }

namespace {

std::string_view id_prefix(Category c) {
  switch (c) {
    case Category::epistemic: return "ep";
    case Category::activation: return "ac";
    case Category::evaluation: return "ev";
    case Category::deliberation: return "de";
    case Category::checking: return "ck";
  }
  return "?";
}

std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

Argument make_argument(Category category, DerivationSchema support, std::optional<Literal> goal) {
  Argument a;
  a.category = category;
  a.claim = support.target();
  a.support = std::move(support);
  a.goal = std::move(goal);
  a.id = make_argument_id(category, canonical_text(a));
  return a;
}

void sort_by_id(std::vector<Argument>& args) {
  std::sort(args.begin(), args.end(), [](const Argument& a, const Argument& b) { return a.id < b.id; });
}

}  // namespace

std::string canonical_text(const Argument& a) {
  return std::string(to_string(a.category)) + " " + to_string(a.claim) + " " + to_string(a.support);
}

std::string make_argument_id(Category category, const std::string& canonical) {
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(fnv1a(canonical)));
  return std::string(id_prefix(category)) + ":" + std::string(hex, 12);
}

Literal chosen_literal(const Literal& goal) { return Literal("chosen", {quote(goal)}); }
Literal executive_literal(const Literal& goal) { return Literal("executive", {quote(goal)}); }

Literal stage_claim(Stage stage, const Literal& goal) {
  switch (stage) {
    case Stage::activation: return goal;
    case Stage::evaluation: return goal.complement();
    case Stage::deliberation: return chosen_literal(goal);
    case Stage::checking: return executive_literal(goal);
  }
  return goal;
}

std::vector<Argument> build_epistemic(const Theory& theory) {
  const Deriver deriver(theory, {RuleKind::standard});
  std::vector<Argument> out;
  for (const Literal& lit : deriver.derivable())
    for (DerivationSchema& s : deriver.derive_all(lit))
      out.push_back(make_argument(Category::epistemic, std::move(s), std::nullopt));
  sort_by_id(out);
  return out;
}

std::vector<Argument> build_stage(const Theory& theory, Stage stage, const std::set<Literal>& candidates) {
  std::vector<Argument> out;
  if (candidates.empty()) return out;
  const RuleKind kind = rule_kind_of(stage);
  const Deriver deriver(theory, {RuleKind::standard, kind});
  for (const Literal& g : candidates) {
    for (DerivationSchema& s : deriver.derive_all(stage_claim(stage, g))) {
      if (s.last().is_fact() || s.last().rule->kind != kind) continue;
      out.push_back(make_argument(category_of(stage), std::move(s), g));
    }
  }
  sort_by_id(out);
  return out;
}

std::set<Literal> activation_candidates(const Theory& theory) {
  std::set<Literal> out;
  for (const GroundRule& r : ground(theory, {RuleKind::standard, RuleKind::activation})) {
    if (r.kind != RuleKind::activation) continue;
    for (const Literal& pattern : theory.sleeping_goals()) {
      Substitution s;
      if (match(pattern, r.head, s)) {
        out.insert(r.head);
        break;
      }
    }
  }
  return out;
}

std::vector<const Argument*> sub_arguments(const Argument& a, const std::vector<Argument>& universe) {
  std::vector<const Argument*> out;
  for (const Argument& b : universe)
    if (is_sub_schema(b.support, a.support)) out.push_back(&b);
  return out;
}

bool rebuts(const Argument& a, const Argument& b) {
  if (!a.is_epistemic() || !b.is_epistemic()) return false;
  if (!a.claim.is_complement_of(b.claim)) return false;
  return a.has_strict_claim() || !b.has_strict_claim();
}

bool undercuts(const Argument& a, const Argument& b) {
  if (!a.is_epistemic()) return false;
  const Literal contradicted = a.claim.complement();
  if (b.is_epistemic()) return b.support.facts().count(contradicted) > 0;
  return b.support.seq().count(contradicted) > 0;
}

std::vector<Attack> compute_attacks(const std::vector<Argument>& args) {
  std::vector<Attack> out;
  for (const Argument& a : args) {
    if (!a.is_epistemic()) continue;
    for (const Argument& b : args) {
      const Relation rel = b.is_epistemic() ? Relation::ep : Relation::mx;
      if (rebuts(a, b))
        out.push_back(Attack{a.id, b.id, Flavor::rebut, rel});
      else if (undercuts(a, b))
        out.push_back(Attack{a.id, b.id, Flavor::undercut, rel});
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace bbgp
