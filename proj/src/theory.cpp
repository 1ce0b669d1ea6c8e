#include "bbgp/theory.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "bbgp/errors.hpp"
#include "lexer.hpp"

namespace bbgp {

std::string_view to_string(RuleKind kind) {
  switch (kind) {
    case RuleKind::standard: return "standard";
    case RuleKind::activation: return "activation";
    case RuleKind::evaluation: return "evaluation";
    case RuleKind::deliberation: return "deliberation";
    case RuleKind::checking: return "checking";
  }
  return "?";
}

std::string_view to_string(Strength strength) { return strength == Strength::strict ? "strict" : "defeasible"; }

std::vector<Rule> builtin_rules() {
  const Term g = Term::variable("G");
  return {
      Rule{std::string(kBuiltinNoIncompatibility), RuleKind::deliberation, Strength::strict,
           {Literal("has_incompatibility", {g}, true)}, Literal("chosen", {g})},
      Rule{std::string(kBuiltinMostValuable), RuleKind::deliberation, Strength::strict,
           {Literal("most_valuable", {g})}, Literal("chosen", {g})},
      Rule{std::string(kBuiltinChecking), RuleKind::checking, Strength::strict,
           {Literal("has_plans_for", {g}), Literal("satisfied_context_for", {g})}, Literal("executive", {g})},
  };
}

bool is_builtin(const Rule& rule) {
  return rule.kind == RuleKind::deliberation || rule.kind == RuleKind::checking;
}

Theory::Theory() : rules_(builtin_rules()) {}

bool Theory::add_fact(Fact fact) {
  if (has_fact(fact.literal)) return false;
  facts_.push_back(std::move(fact));
  return true;
}

void Theory::add_rule(Rule rule) { rules_.push_back(std::move(rule)); }

void Theory::add_sleeping_goal(Literal pattern) {
  if (std::find(sleeping_goals_.begin(), sleeping_goals_.end(), pattern) == sleeping_goals_.end())
    sleeping_goals_.push_back(std::move(pattern));
}

const Rule* Theory::find_rule(std::string_view id) const {
  for (const Rule& r : rules_)
    if (r.id == id) return &r;
  return nullptr;
}

const Fact* Theory::find_fact(const Literal& lit) const {
  for (const Fact& f : facts_)
    if (f.literal == lit) return &f;
  return nullptr;
}

std::vector<const Rule*> Theory::rules_of(RuleKind kind) const {
  std::vector<const Rule*> out;
  for (const Rule& r : rules_)
    if (r.kind == kind) out.push_back(&r);
  return out;
}

std::vector<const Rule*> Theory::rules_of(Strength strength) const {
  std::vector<const Rule*> out;
  for (const Rule& r : rules_)
    if (r.strength == strength) out.push_back(&r);
  return out;
}

Theory Theory::without_fact(std::string_view key) const {
  Theory out = *this;
  std::erase_if(out.facts_, [&](const Fact& f) { return f.id == key || to_string(f.literal) == key; });
  return out;
}

bool operator==(const Theory& a, const Theory& b) {
  auto sorted = [](auto v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  return sorted(a.facts_) == sorted(b.facts_) && sorted(a.rules_) == sorted(b.rules_) &&
         sorted(a.sleeping_goals_) == sorted(b.sleeping_goals_) && a.templates_ == b.templates_;
}

namespace {

using detail::Tok;
using detail::Token;
using detail::TokenStream;

struct Located {
  int line;
  int column;
};

// Alternate spellings accepted for builtin belief predicates.
const std::map<std::string, std::string>& predicate_aliases() {
  static const std::map<std::string, std::string> aliases{{"most_valuable_goal", "most_valuable"}};
  return aliases;
}

class TheoryParser {
 public:
  explicit TheoryParser(std::string_view source) : ts_(detail::tokenize(source)) {}

  Theory run() {
    while (!ts_.at_end()) statement();
    validate();
    return std::move(theory_);
  }

 private:
  void statement() {
    const Token& kw = ts_.peek();
    if (kw.kind != Tok::identifier) ts_.fail(kw, "expected a declaration keyword, found '" + kw.text + "'");
    ts_.next();
    if (kw.text == "goal") {
      Literal pattern = literal();
      if (pattern.negated) ts_.fail(kw, "sleeping goals must be positive literals");
      theory_.add_sleeping_goal(std::move(pattern));
      ts_.expect(Tok::dot, "'.'");
    } else if (kw.text == "fact") {
      fact(kw);
    } else if (kw.text == "explain") {
      const Token& key = ts_.next();
      if (key.kind != Tok::identifier) ts_.fail(key, "expected a rule or fact id after 'explain'");
      ts_.expect(Tok::colon, "':'");
      const Token& text = ts_.expect(Tok::string, "a double-quoted template");
      template_keys_.emplace_back(key.text, Located{key.line, key.column});
      theory_.set_template(key.text, text.text);
      ts_.accept(Tok::dot);
    } else if (kw.text == "standard" || kw.text == "activation" || kw.text == "evaluation") {
      rule(kw, kw.text == "standard" ? RuleKind::standard
                                     : kw.text == "activation" ? RuleKind::activation : RuleKind::evaluation);
    } else if (kw.text == "deliberation" || kw.text == "checking") {
      throw KindError("deliberation and checking rules are builtin and cannot be declared", kw.line, kw.column);
    } else {
      ts_.fail(kw, "unknown declaration '" + kw.text + "'");
    }
  }

  void fact(const Token& kw) {
    std::string id;
    if (ts_.peek().kind == Tok::identifier && ts_.peek(1).kind == Tok::colon) {
      id = ts_.next().text;
      ts_.next();
    }
    const Token& at = ts_.peek();
    Literal lit = literal();
    ts_.expect(Tok::dot, "'.'");
    if (!lit.is_ground()) throw RangeError("fact is not ground: " + to_string(lit), at.line, at.column);
    if (id.empty()) id = "f" + std::to_string(theory_.facts().size() + 1);
    for (const Fact& f : theory_.facts())
      if (f.id == id && f.literal != lit) throw ParseError("duplicate fact id '" + id + "'", kw.line, kw.column);
    theory_.add_fact(Fact{std::move(id), std::move(lit)});
  }

  void rule(const Token& kw, RuleKind kind) {
    const Token& id = ts_.next();
    if (id.kind != Tok::identifier) ts_.fail(id, "expected a rule id");
    if (theory_.find_rule(id.text)) {
      if (id.text == kBuiltinNoIncompatibility || id.text == kBuiltinMostValuable || id.text == kBuiltinChecking)
        throw KindError("rule id '" + id.text + "' is reserved for a builtin", id.line, id.column);
      throw ParseError("duplicate rule id '" + id.text + "'", id.line, id.column);
    }
    ts_.expect(Tok::colon, "':'");
    Rule r;
    r.id = id.text;
    r.kind = kind;
    do r.body.push_back(literal());
    while (ts_.accept(Tok::comma));
    const Token& arrow = ts_.next();
    if (arrow.kind == Tok::strict_arrow)
      r.strength = Strength::strict;
    else if (arrow.kind == Tok::defeasible_arrow)
      r.strength = Strength::defeasible;
    else
      ts_.fail(arrow, "expected '->' or '=>' after rule body");
    r.head = literal();
    ts_.expect(Tok::dot, "'.'");

    std::set<std::string> body_vars;
    for (const Literal& b : r.body) body_vars.merge(b.variables());
    for (const std::string& v : r.head.variables())
      if (!body_vars.count(v))
        throw RangeError("variable " + v + " in head of " + r.id + " does not occur in its body", kw.line,
                         kw.column);
    rule_positions_.emplace_back(r.id, Located{kw.line, kw.column});
    theory_.add_rule(std::move(r));
  }

  Literal literal() {
    const Token& at = ts_.peek();
    Literal lit = ts_.read_literal();
    if (auto it = predicate_aliases().find(lit.predicate); it != predicate_aliases().end()) {
      theory_.add_warning(std::to_string(at.line) + ":" + std::to_string(at.column) + ": predicate '" +
                          lit.predicate + "' read as '" + it->second + "'");
      lit.predicate = it->second;
    }
    return lit;
  }

  void validate() {
    auto fits_goal = [&](const Literal& head) {
      for (const Literal& g : theory_.sleeping_goals())
        if (g.predicate == head.predicate && g.args.size() == head.args.size()) return true;
      return false;
    };
    for (const auto& [id, pos] : rule_positions_) {
      const Rule& r = *theory_.find_rule(id);
      if (r.kind == RuleKind::activation && (r.head.negated || !fits_goal(r.head)))
        throw KindError("activation rule " + id + " must conclude a sleeping-goal instance", pos.line, pos.column);
      if (r.kind == RuleKind::evaluation && (!r.head.negated || !fits_goal(r.head)))
        throw KindError("evaluation rule " + id + " must conclude the negation of a sleeping-goal instance",
                        pos.line, pos.column);
    }
    for (const auto& [key, pos] : template_keys_) {
      bool known = theory_.find_rule(key) != nullptr ||
                   std::any_of(theory_.facts().begin(), theory_.facts().end(),
                               [&](const Fact& f) { return f.id == key; });
      if (!known)
        theory_.add_warning(std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": template for unknown id '" +
                            key + "'");
    }
  }

  TokenStream ts_;
  Theory theory_;
  std::vector<std::pair<std::string, Located>> rule_positions_;
  std::vector<std::pair<std::string, Located>> template_keys_;
};

std::string escape_template(const std::string& text) {
  std::string out;
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out += c;
  }
  return out;
}

std::string rule_line(const Rule& r) {
  std::string out = std::string(to_string(r.kind)) + " " + r.id + ": ";
  for (std::size_t i = 0; i < r.body.size(); ++i) {
    if (i) out += ", ";
    out += to_string(r.body[i]);
  }
  out += r.strength == Strength::strict ? " -> " : " => ";
  out += to_string(r.head) + ".";
  return out;
}

}  // namespace

Theory parse_theory(std::string_view source) { return TheoryParser(source).run(); }

std::string serialize_theory(const Theory& t) {
  std::ostringstream os;
  os << "# bbgp agent theory\n";
  for (const Rule& r : builtin_rules()) os << "# builtin " << rule_line(r) << "\n";

  if (!t.sleeping_goals().empty()) os << "\n";
  for (const Literal& g : t.sleeping_goals()) os << "goal " << to_string(g) << ".\n";

  bool first = true;
  for (const Rule& r : t.rules()) {
    if (is_builtin(r)) continue;
    if (std::exchange(first, false)) os << "\n";
    os << rule_line(r) << "\n";
  }

  if (!t.facts().empty()) os << "\n";
  for (const Fact& f : t.facts()) os << "fact " << f.id << ": " << to_string(f.literal) << ".\n";

  if (!t.templates().empty()) os << "\n";
  for (const auto& [key, text] : t.templates()) os << "explain " << key << ": \"" << escape_template(text) << "\".\n";
  return os.str();
}

Theory load_theory_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read theory file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_theory(buf.str());
}

}  // namespace bbgp
