// Terms and literals of the rule language.
#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace bbgp {

/// A first-order term. Quoted terms reify a literal (`'take_hospital(man_32)'`)
/// and compare structurally: `name` holds the predicate and `negated` its sign.
struct Term {
  enum class Kind { constant, number, string, variable, compound, quoted };

  Kind kind = Kind::constant;
  std::string name;
  std::vector<Term> args;
  bool negated = false;

  static Term constant(std::string name);
  static Term number(std::string digits);
  static Term string(std::string text);
  static Term variable(std::string name);
  static Term compound(std::string functor, std::vector<Term> args);

  bool is_ground() const;
  void collect_variables(std::set<std::string>& out) const;

  friend bool operator==(const Term&, const Term&) = default;
  friend std::strong_ordering operator<=>(const Term& a, const Term& b);
};

struct Literal {
  bool negated = false;
  std::string predicate;
  std::vector<Term> args;

  Literal() = default;
  Literal(std::string predicate, std::vector<Term> args, bool negated = false)
      : negated(negated), predicate(std::move(predicate)), args(std::move(args)) {}

  Literal complement() const {
    Literal out = *this;
    out.negated = !negated;
    return out;
  }
  bool is_complement_of(const Literal& other) const {
    return negated != other.negated && predicate == other.predicate && args == other.args;
  }
  bool is_ground() const;
  std::set<std::string> variables() const;

  friend bool operator==(const Literal&, const Literal&) = default;
  friend std::strong_ordering operator<=>(const Literal& a, const Literal& b);
};

/// Reify a literal as a term, e.g. the argument of `chosen(...)`.
Term quote(const Literal& lit);
/// Inverse of quote(); nullopt when `t` is not a quoted literal.
std::optional<Literal> unquote(const Term& t);

std::string to_string(const Term& t);
std::string to_string(const Literal& lit);

/// Parse a single literal such as `~available(bed, man_32)`. Throws ParseError.
Literal parse_literal(const std::string& text);

using Substitution = std::map<std::string, Term>;

Term apply(const Term& t, const Substitution& s);
Literal apply(const Literal& lit, const Substitution& s);

/// One-way matching of a pattern against a ground term/literal, extending `s`.
/// On failure `s` may be partially extended; callers pass a copy.
bool match(const Term& pattern, const Term& ground, Substitution& s);
bool match(const Literal& pattern, const Literal& ground, Substitution& s);

}  // namespace bbgp
