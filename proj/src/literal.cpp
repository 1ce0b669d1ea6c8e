#include "bbgp/literal.hpp"

#include "lexer.hpp"

namespace bbgp {

Term Term::constant(std::string name) { return Term{Kind::constant, std::move(name), {}, false}; }
Term Term::number(std::string digits) { return Term{Kind::number, std::move(digits), {}, false}; }
Term Term::string(std::string text) { return Term{Kind::string, std::move(text), {}, false}; }
Term Term::variable(std::string name) { return Term{Kind::variable, std::move(name), {}, false}; }
Term Term::compound(std::string functor, std::vector<Term> args) {
  return Term{Kind::compound, std::move(functor), std::move(args), false};
}

bool Term::is_ground() const {
  if (kind == Kind::variable) return false;
  for (const Term& a : args)
    if (!a.is_ground()) return false;
  return true;
}

void Term::collect_variables(std::set<std::string>& out) const {
  if (kind == Kind::variable) out.insert(name);
  for (const Term& a : args) a.collect_variables(out);
}

std::strong_ordering operator<=>(const Term& a, const Term& b) {
  if (auto c = a.kind <=> b.kind; c != 0) return c;
  if (auto c = a.negated <=> b.negated; c != 0) return c;
  if (auto c = a.name <=> b.name; c != 0) return c;
  return std::lexicographical_compare_three_way(a.args.begin(), a.args.end(), b.args.begin(), b.args.end());
}

bool Literal::is_ground() const {
  for (const Term& a : args)
    if (!a.is_ground()) return false;
  return true;
}

std::set<std::string> Literal::variables() const {
  std::set<std::string> out;
  for (const Term& a : args) a.collect_variables(out);
  return out;
}

std::strong_ordering operator<=>(const Literal& a, const Literal& b) {
  if (auto c = a.predicate <=> b.predicate; c != 0) return c;
  if (auto c = a.args.size() <=> b.args.size(); c != 0) return c;
  if (auto c = std::lexicographical_compare_three_way(a.args.begin(), a.args.end(), b.args.begin(), b.args.end());
      c != 0)
    return c;
  return a.negated <=> b.negated;
}

Term quote(const Literal& lit) { return Term{Term::Kind::quoted, lit.predicate, lit.args, lit.negated}; }

std::optional<Literal> unquote(const Term& t) {
  if (t.kind != Term::Kind::quoted) return std::nullopt;
  return Literal(t.name, t.args, t.negated);
}

namespace {

void append_args(std::string& out, const std::vector<Term>& args) {
  out += '(';
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) out += ", ";
    out += to_string(args[i]);
  }
  out += ')';
}

std::string escape(const std::string& text, char delim) {
  std::string out;
  for (char c : text) {
    if (c == delim || c == '\\') out += '\\';
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out += c;
  }
  return out;
}

}  // namespace

std::string to_string(const Term& t) {
  switch (t.kind) {
    case Term::Kind::constant:
    case Term::Kind::number:
    case Term::Kind::variable:
      return t.name;
    case Term::Kind::string:
      return "'" + escape(t.name, '\'') + "'";
    case Term::Kind::compound: {
      std::string out = t.name;
      append_args(out, t.args);
      return out;
    }
    case Term::Kind::quoted:
      return "'" + escape(to_string(*unquote(t)), '\'') + "'";
  }
  return {};
}

std::string to_string(const Literal& lit) {
  std::string out = lit.negated ? "~" : "";
  out += lit.predicate;
  if (!lit.args.empty()) append_args(out, lit.args);
  return out;
}

Literal parse_literal(const std::string& text) {
  detail::TokenStream ts(detail::tokenize(text));
  Literal lit = ts.read_literal();
  if (!ts.at_end()) ts.fail(ts.peek(), "trailing input after literal: '" + ts.peek().text + "'");
  return lit;
}

Term apply(const Term& t, const Substitution& s) {
  if (t.kind == Term::Kind::variable) {
    auto it = s.find(t.name);
    return it == s.end() ? t : it->second;
  }
  if (t.args.empty()) return t;
  Term out = t;
  for (Term& a : out.args) a = bbgp::apply(a, s);
  return out;
}

Literal apply(const Literal& lit, const Substitution& s) {
  Literal out = lit;
  for (Term& a : out.args) a = bbgp::apply(a, s);
  return out;
}

bool match(const Term& pattern, const Term& ground, Substitution& s) {
  if (pattern.kind == Term::Kind::variable) {
    auto [it, inserted] = s.emplace(pattern.name, ground);
    return inserted || it->second == ground;
  }
  if (pattern.kind != ground.kind || pattern.name != ground.name || pattern.negated != ground.negated ||
      pattern.args.size() != ground.args.size())
    return false;
  for (std::size_t i = 0; i < pattern.args.size(); ++i)
    if (!match(pattern.args[i], ground.args[i], s)) return false;
  return true;
}

bool match(const Literal& pattern, const Literal& ground, Substitution& s) {
  if (pattern.negated != ground.negated || pattern.predicate != ground.predicate ||
      pattern.args.size() != ground.args.size())
    return false;
  for (std::size_t i = 0; i < pattern.args.size(); ++i)
    if (!match(pattern.args[i], ground.args[i], s)) return false;
  return true;
}

}  // namespace bbgp
