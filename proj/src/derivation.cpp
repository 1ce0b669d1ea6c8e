#include "bbgp/derivation.hpp"

#include <algorithm>
#include <queue>

namespace bbgp {

std::strong_ordering operator<=>(const GroundRule& a, const GroundRule& b) {
  if (auto c = a.origin <=> b.origin; c != 0) return c;
  if (auto c = a.head <=> b.head; c != 0) return c;
  return std::lexicographical_compare_three_way(a.body.begin(), a.body.end(), b.body.begin(), b.body.end());
}

std::string to_string(const GroundRule& r) {
  std::string out = r.origin + ": ";
  for (std::size_t i = 0; i < r.body.size(); ++i) {
    if (i) out += ", ";
    out += to_string(r.body[i]);
  }
  out += r.strength == Strength::strict ? " -> " : " => ";
  return out + to_string(r.head);
}

const std::set<RuleKind>& all_rule_kinds() {
  static const std::set<RuleKind> kinds{RuleKind::standard, RuleKind::activation, RuleKind::evaluation,
                                        RuleKind::deliberation, RuleKind::checking};
  return kinds;
}

std::set<Literal> DerivationSchema::seq() const {
  std::set<Literal> out;
  for (const Step& s : steps_) out.insert(s.literal);
  return out;
}

std::set<Literal> DerivationSchema::facts() const {
  std::set<Literal> out;
  for (const Step& s : steps_)
    if (s.is_fact()) out.insert(s.literal);
  return out;
}

std::set<GroundRule> DerivationSchema::strict() const {
  std::set<GroundRule> out;
  for (const Step& s : steps_)
    if (s.rule && s.rule->strength == Strength::strict) out.insert(*s.rule);
  return out;
}

std::set<GroundRule> DerivationSchema::defeasible() const {
  std::set<GroundRule> out;
  for (const Step& s : steps_)
    if (s.rule && s.rule->strength == Strength::defeasible) out.insert(*s.rule);
  return out;
}

bool DerivationSchema::is_consistent() const {
  const std::set<Literal> lits = seq();
  for (const Literal& l : lits)
    if (!l.negated && lits.count(l.complement())) return false;
  return true;
}

std::string to_string(const DerivationSchema& schema) {
  std::string out = "{";
  for (std::size_t i = 0; i < schema.steps().size(); ++i) {
    const Step& s = schema.steps()[i];
    if (i) out += ", ";
    out += "(" + to_string(s.literal) + ", " + (s.rule ? s.rule->origin : std::string("-")) + ")";
  }
  return out + "}";
}

bool is_sub_schema(const DerivationSchema& sub, const DerivationSchema& super) {
  auto included = [](const auto& a, const auto& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); };
  return included(sub.facts(), super.facts()) && included(sub.strict(), super.strict()) &&
         included(sub.defeasible(), super.defeasible());
}

namespace {

// Extends `s` by matching body[i..] against `known`, calling `emit` per full match.
template <typename Emit>
void join(const std::vector<Literal>& body, std::size_t i, const Substitution& s, const std::set<Literal>& known,
          Emit&& emit) {
  if (i == body.size()) {
    emit(s);
    return;
  }
  const Literal pattern = bbgp::apply(body[i], s);
  if (pattern.is_ground()) {
    if (known.count(pattern)) join(body, i + 1, s, known, emit);
    return;
  }
  for (const Literal& k : known) {
    if (k.predicate != pattern.predicate || k.negated != pattern.negated || k.args.size() != pattern.args.size())
      continue;
    Substitution next = s;
    if (match(pattern, k, next)) join(body, i + 1, next, known, emit);
  }
}

}  // namespace

std::vector<GroundRule> ground(const Theory& theory) { return ground(theory, all_rule_kinds()); }

std::vector<GroundRule> ground(const Theory& theory, const std::set<RuleKind>& kinds) {
  std::set<Literal> known;
  for (const Fact& f : theory.facts()) known.insert(f.literal);

  std::set<GroundRule> emitted;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Rule& rule : theory.rules()) {
      if (!kinds.count(rule.kind)) continue;
      std::vector<GroundRule> found;
      join(rule.body, 0, Substitution{}, known, [&](const Substitution& s) {
        GroundRule g{rule.id, rule.kind, rule.strength, {}, bbgp::apply(rule.head, s), s};
        for (const Literal& b : rule.body) g.body.push_back(bbgp::apply(b, s));
        found.push_back(std::move(g));
      });
      for (GroundRule& g : found) {
        known.insert(g.head);
        if (emitted.insert(std::move(g)).second) changed = true;
      }
    }
  }
  return {emitted.begin(), emitted.end()};
}

Deriver::Deriver(std::set<Literal> facts, std::vector<GroundRule> rules)
    : facts_(std::move(facts)), rules_(std::move(rules)) {
  for (const GroundRule& r : rules_) by_head_[r.head].push_back(&r);
}

Deriver::Deriver(const Theory& theory, const std::set<RuleKind>& kinds)
    : Deriver(
          [&] {
            std::set<Literal> f;
            for (const Fact& fact : theory.facts()) f.insert(fact.literal);
            return f;
          }(),
          ground(theory, kinds)) {}

std::set<Literal> Deriver::derivable() const {
  std::set<Literal> out = facts_;
  for (const GroundRule& r : rules_) out.insert(r.head);
  return out;
}

namespace {

bool consistent_with(const std::map<Literal, std::optional<GroundRule>>& m, const Literal& lit) {
  return !m.count(lit.complement());
}

}  // namespace

// Each partial derivation maps every literal it uses to a single justification.
// Two justifications for one literal never make a minimal schema, so merges
// that would need them are dropped, as are merges mixing complements.
std::vector<Deriver::Partial> Deriver::expand(const Literal& lit, std::set<Literal>& visiting) const {
  std::vector<Partial> out;
  if (visiting.count(lit)) return out;
  if (facts_.count(lit)) out.push_back(Partial{{lit, std::nullopt}});

  auto it = by_head_.find(lit);
  if (it == by_head_.end()) return out;

  visiting.insert(lit);
  for (const GroundRule* rule : it->second) {
    std::vector<Partial> combos{Partial{{lit, *rule}}};
    for (const Literal& b : rule->body) {
      const std::vector<Partial> subs = expand(b, visiting);
      std::vector<Partial> next;
      for (const Partial& c : combos) {
        for (const Partial& s : subs) {
          Partial merged = c;
          bool ok = true;
          for (const auto& [l, just] : s) {
            auto found = merged.find(l);
            if (found != merged.end()) {
              if (found->second != just) {
                ok = false;
                break;
              }
              continue;
            }
            if (!consistent_with(merged, l)) {
              ok = false;
              break;
            }
            merged.emplace(l, just);
          }
          if (ok) next.push_back(std::move(merged));
        }
      }
      combos = std::move(next);
      if (combos.empty()) break;
    }
    for (Partial& c : combos)
      if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(std::move(c));
  }
  visiting.erase(lit);
  return out;
}

namespace {

DerivationSchema order_steps(const std::map<Literal, std::optional<GroundRule>>& partial) {
  std::map<Literal, int> pending;
  std::map<Literal, std::vector<Literal>> dependents;
  for (const auto& [lit, just] : partial) {
    int deps = 0;
    if (just) {
      std::set<Literal> uniq(just->body.begin(), just->body.end());
      for (const Literal& b : uniq) {
        dependents[b].push_back(lit);
        ++deps;
      }
    }
    pending[lit] = deps;
  }

  using Entry = std::pair<std::string, Literal>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> ready;
  for (const auto& [lit, deps] : pending)
    if (deps == 0) ready.emplace(to_string(lit), lit);

  std::vector<Step> steps;
  while (!ready.empty()) {
    Literal lit = ready.top().second;
    ready.pop();
    steps.push_back(Step{lit, partial.at(lit)});
    for (const Literal& d : dependents[lit])
      if (--pending[d] == 0) ready.emplace(to_string(d), d);
  }
  return DerivationSchema(std::move(steps));
}

}  // namespace

std::vector<DerivationSchema> Deriver::derive_all(const Literal& target) const {
  std::set<Literal> visiting;
  std::vector<std::pair<std::string, DerivationSchema>> keyed;
  for (const Partial& p : expand(target, visiting)) {
    DerivationSchema schema = order_steps(p);
    if (!schema.is_consistent()) continue;
    keyed.emplace_back(to_string(schema), std::move(schema));
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<DerivationSchema> out;
  for (auto& [key, schema] : keyed) out.push_back(std::move(schema));
  return out;
}

std::vector<DerivationSchema> derive_all(const Theory& theory, const Literal& target) {
  return Deriver(theory, all_rule_kinds()).derive_all(target);
}

}  // namespace bbgp
