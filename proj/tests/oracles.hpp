// Test-only brute-force oracles and random instance generators. Nothing here
// calls into the solver or the deriver it checks.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "bbgp/literal.hpp"
#include "bbgp/theory.hpp"

namespace oracle {

// ---------------------------------------------------------------------------
// Abstract argumentation: subset enumeration over at most 16 arguments.

struct SmallAF {
  int n = 0;
  std::vector<std::pair<int, int>> attacks;

  bool att(int a, int b) const {
    return std::find(attacks.begin(), attacks.end(), std::make_pair(a, b)) != attacks.end();
  }
};

using Mask = std::uint32_t;

inline bool in(Mask m, int a) { return (m >> a) & 1u; }

inline bool conflict_free(const SmallAF& af, Mask e) {
  for (int a = 0; a < af.n; ++a)
    for (int b = 0; b < af.n; ++b)
      if (in(e, a) && in(e, b) && af.att(a, b)) return false;
  return true;
}

inline bool defends(const SmallAF& af, Mask e, int a) {
  for (int b = 0; b < af.n; ++b) {
    if (!af.att(b, a)) continue;
    bool countered = false;
    for (int c = 0; c < af.n; ++c)
      if (in(e, c) && af.att(c, b)) countered = true;
    if (!countered) return false;
  }
  return true;
}

inline bool is_complete(const SmallAF& af, Mask e) {
  if (!conflict_free(af, e)) return false;
  for (int a = 0; a < af.n; ++a)
    if (in(e, a) != defends(af, e, a)) return false;
  return true;
}

inline bool is_stable(const SmallAF& af, Mask e) {
  if (!conflict_free(af, e)) return false;
  for (int a = 0; a < af.n; ++a) {
    if (in(e, a)) continue;
    bool hit = false;
    for (int b = 0; b < af.n; ++b)
      if (in(e, b) && af.att(b, a)) hit = true;
    if (!hit) return false;
  }
  return true;
}

struct BruteExtensions {
  std::set<Mask> complete, preferred, grounded, stable;
};

inline BruteExtensions brute_force(const SmallAF& af) {
  BruteExtensions out;
  const Mask all = af.n == 0 ? 0 : ((Mask{1} << af.n) - 1);
  for (Mask e = 0;; ++e) {
    if (is_complete(af, e)) out.complete.insert(e);
    if (is_stable(af, e)) out.stable.insert(e);
    if (e == all) break;
  }
  auto proper_subset = [](Mask a, Mask b) { return a != b && (a & b) == a; };
  for (Mask e : out.complete) {
    bool maximal = true, minimal = true;
    for (Mask f : out.complete) {
      if (proper_subset(e, f)) maximal = false;
      if (proper_subset(f, e)) minimal = false;
    }
    if (maximal) out.preferred.insert(e);
    if (minimal) out.grounded.insert(e);
  }
  return out;
}

inline SmallAF random_af(std::mt19937& rng, int max_n) {
  SmallAF af;
  af.n = std::uniform_int_distribution<int>(0, max_n)(rng);
  const double density = std::uniform_real_distribution<double>(0.0, 0.35)(rng);
  std::bernoulli_distribution edge(density);
  std::bernoulli_distribution self(0.05);
  for (int a = 0; a < af.n; ++a)
    for (int b = 0; b < af.n; ++b)
      if (a == b ? self(rng) : edge(rng)) af.attacks.emplace_back(a, b);
  return af;
}

// ---------------------------------------------------------------------------
// Derivations: Herbrand instantiation plus subset enumeration of ground steps.

using RuleKey = std::tuple<std::string, bbgp::Literal, std::vector<bbgp::Literal>>;  // origin, head, body
using SchemaKey = std::tuple<std::set<bbgp::Literal>, std::set<RuleKey>, std::set<RuleKey>>;

struct OracleStep {
  bbgp::Literal literal;
  std::optional<RuleKey> rule;
  bbgp::Strength strength = bbgp::Strength::strict;
};

inline void substitutions(const std::vector<std::string>& vars, std::size_t i, const std::vector<bbgp::Term>& consts,
                          bbgp::Substitution& s, std::vector<bbgp::Substitution>& out) {
  if (i == vars.size()) {
    out.push_back(s);
    return;
  }
  for (const bbgp::Term& c : consts) {
    s[vars[i]] = c;
    substitutions(vars, i + 1, consts, s, out);
  }
  s.erase(vars[i]);
}

/// Fact steps plus every standard-rule instance over the theory's constants
/// whose body is supported by facts or other supported instances.
inline std::vector<OracleStep> herbrand_steps(const bbgp::Theory& t) {
  std::set<bbgp::Term> consts;
  auto collect = [&](const bbgp::Literal& l) {
    for (const bbgp::Term& a : l.args)
      if (a.is_ground()) consts.insert(a);
  };
  for (const bbgp::Fact& f : t.facts()) collect(f.literal);
  for (const bbgp::Rule& r : t.rules()) {
    collect(r.head);
    for (const bbgp::Literal& b : r.body) collect(b);
  }
  const std::vector<bbgp::Term> constants(consts.begin(), consts.end());

  std::vector<OracleStep> candidates;
  for (const bbgp::Rule& r : t.rules()) {
    if (r.kind != bbgp::RuleKind::standard) continue;
    std::set<std::string> vars;
    for (const bbgp::Literal& b : r.body) vars.merge(b.variables());
    std::vector<bbgp::Substitution> subs;
    bbgp::Substitution s;
    substitutions({vars.begin(), vars.end()}, 0, constants, s, subs);
    for (const bbgp::Substitution& sub : subs) {
      std::vector<bbgp::Literal> body;
      for (const bbgp::Literal& b : r.body) body.push_back(bbgp::apply(b, sub));
      bbgp::Literal head = bbgp::apply(r.head, sub);
      candidates.push_back({head, RuleKey{r.id, head, body}, r.strength});
    }
  }

  std::set<bbgp::Literal> known;
  std::vector<OracleStep> out;
  for (const bbgp::Fact& f : t.facts()) {
    known.insert(f.literal);
    out.push_back({f.literal, std::nullopt, bbgp::Strength::strict});
  }
  std::vector<bool> taken(candidates.size(), false);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (taken[i]) continue;
      const auto& body = std::get<2>(*candidates[i].rule);
      if (!std::all_of(body.begin(), body.end(), [&](const bbgp::Literal& b) { return known.count(b) > 0; })) continue;
      taken[i] = true;
      changed = true;
      known.insert(candidates[i].literal);
      if (std::none_of(out.begin(), out.end(), [&](const OracleStep& o) { return o.rule == candidates[i].rule; }))
        out.push_back(candidates[i]);
    }
  }
  return out;
}

/// For every literal, the minimal consistent schemas found by checking every
/// subset of `steps` against the derivation-schema conditions directly.
inline std::map<bbgp::Literal, std::set<SchemaKey>> brute_force_schemas(const std::vector<OracleStep>& steps) {
  const int n = static_cast<int>(steps.size());
  std::vector<bbgp::Literal> lits;
  for (const OracleStep& s : steps) {
    lits.push_back(s.literal);
    if (s.rule)
      for (const bbgp::Literal& b : std::get<2>(*s.rule)) lits.push_back(b);
  }
  std::sort(lits.begin(), lits.end());
  lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
  auto bit = [&](const bbgp::Literal& l) {
    return std::uint64_t{1} << (std::lower_bound(lits.begin(), lits.end(), l) - lits.begin());
  };
  std::vector<std::uint64_t> produces(n), needs(n, 0);
  for (int i = 0; i < n; ++i) {
    produces[i] = bit(steps[i].literal);
    if (steps[i].rule)
      for (const bbgp::Literal& b : std::get<2>(*steps[i].rule)) needs[i] |= bit(b);
  }

  const Mask total = Mask{1} << n;
  std::vector<bool> orderable(total, false);
  for (Mask m = 0; m < total; ++m) {
    Mask placed = 0;
    std::uint64_t have = 0;
    for (bool grew = true; grew;) {
      grew = false;
      for (int i = 0; i < n; ++i) {
        if (!in(m, i) || in(placed, i) || (needs[i] & ~have)) continue;
        placed |= Mask{1} << i;
        have |= produces[i];
        grew = true;
      }
    }
    orderable[m] = placed == m;
  }

  // valid[literal] = masks forming a derivation schema whose last step concludes it
  std::map<bbgp::Literal, std::vector<Mask>> valid;
  for (Mask m = 1; m < total; ++m) {
    if (!orderable[m]) continue;
    for (int i = 0; i < n; ++i) {
      if (!in(m, i)) continue;
      const Mask rest = m & ~(Mask{1} << i);
      std::uint64_t have = 0;
      for (int j = 0; j < n; ++j)
        if (in(rest, j)) have |= produces[j];
      if (orderable[rest] && !(needs[i] & ~have)) {
        auto& v = valid[steps[i].literal];
        if (v.empty() || v.back() != m) v.push_back(m);
      }
    }
  }

  std::map<bbgp::Literal, std::set<SchemaKey>> out;
  for (const auto& [lit, masks] : valid) {
    for (Mask m : masks) {
      bool minimal = true;
      for (Mask o : masks)
        if (o != m && (o & m) == o) minimal = false;
      if (!minimal) continue;
      std::set<bbgp::Literal> seq;
      SchemaKey key;
      for (int i = 0; i < n; ++i) {
        if (!in(m, i)) continue;
        seq.insert(steps[i].literal);
        if (!steps[i].rule)
          std::get<0>(key).insert(steps[i].literal);
        else if (steps[i].strength == bbgp::Strength::strict)
          std::get<1>(key).insert(*steps[i].rule);
        else
          std::get<2>(key).insert(*steps[i].rule);
      }
      bool consistent = std::none_of(seq.begin(), seq.end(), [&](const bbgp::Literal& l) {
        return seq.count(l.complement()) > 0;
      });
      if (consistent) out[lit].insert(std::move(key));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Random theories.

/// Small standard-rule theories over p/0, q/0, u/0, r/1, s/1, t/1 and two
/// constants. Range restriction is enforced by construction.
inline bbgp::Theory random_standard_theory(std::mt19937& rng, int max_facts, int max_rules) {
  using bbgp::Literal;
  using bbgp::Term;
  const std::vector<std::pair<std::string, int>> preds{{"p", 0}, {"q", 0}, {"u", 0}, {"r", 1}, {"s", 1}, {"t", 1}};
  const std::vector<Term> consts{Term::constant("a"), Term::constant("b")};
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  std::bernoulli_distribution neg(0.25), var(0.6), strict(0.5);

  auto literal = [&](bool allow_var) {
    const auto& [name, arity] = preds[pick(0, static_cast<int>(preds.size()) - 1)];
    std::vector<Term> args;
    for (int i = 0; i < arity; ++i)
      args.push_back(allow_var && var(rng) ? Term::variable("X") : consts[pick(0, 1)]);
    return Literal(name, std::move(args), neg(rng));
  };

  bbgp::Theory t;
  const int facts = pick(1, max_facts);
  for (int i = 0; i < facts; ++i) t.add_fact({"f" + std::to_string(i + 1), literal(false)});
  const int rules = pick(1, max_rules);
  for (int i = 0; i < rules; ++i) {
    bbgp::Rule r;
    r.id = "r" + std::to_string(i + 1);
    r.kind = bbgp::RuleKind::standard;
    r.strength = strict(rng) ? bbgp::Strength::strict : bbgp::Strength::defeasible;
    const int body = pick(1, 2);
    for (int k = 0; k < body; ++k) r.body.push_back(literal(true));
    r.head = literal(true);
    std::set<std::string> body_vars;
    for (const Literal& b : r.body) body_vars.merge(b.variables());
    if (!body_vars.count("X"))
      for (Term& a : r.head.args)
        if (a.kind == Term::Kind::variable) a = consts[0];
    t.add_rule(std::move(r));
  }
  return t;
}

}  // namespace oracle
