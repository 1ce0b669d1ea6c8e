#include "bbgp/semantics.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "bbgp/errors.hpp"

namespace bbgp {

std::string_view to_string(Semantics s) {
  switch (s) {
    case Semantics::complete: return "complete";
    case Semantics::preferred: return "preferred";
    case Semantics::grounded: return "grounded";
    case Semantics::stable: return "stable";
  }
  return "?";
}

std::optional<Semantics> semantics_from_string(std::string_view name) {
  for (Semantics s : {Semantics::complete, Semantics::preferred, Semantics::grounded, Semantics::stable})
    if (to_string(s) == name) return s;
  return std::nullopt;
}

const Argument* ArgumentationFramework::find(std::string_view id) const {
  auto it = std::lower_bound(args.begin(), args.end(), id, [](const Argument& a, std::string_view v) { return a.id < v; });
  return it != args.end() && it->id == id ? &*it : nullptr;
}

bool Extension::contains(std::string_view id) const {
  return std::binary_search(members.begin(), members.end(), id, std::less<>{});
}

namespace {

std::vector<Attack> restrict_attacks(const std::vector<Attack>& attacks, const std::set<std::string>& ids) {
  std::vector<Attack> out;
  for (const Attack& at : attacks)
    if (ids.count(at.attacker) && ids.count(at.target)) out.push_back(at);
  std::sort(out.begin(), out.end());
  return out;
}

// Grows `included` to the least set closed under "epistemic attackers of an
// included argument" and "sub-arguments of an included argument".
std::set<std::string> close_over(std::set<std::string> included, const std::map<std::string, const Argument*>& pool,
                                 const std::vector<Attack>& attacks) {
  std::vector<Argument> universe;
  universe.reserve(pool.size());
  for (const auto& [id, arg] : pool) universe.push_back(*arg);

  bool changed = true;
  while (changed) {
    changed = false;
    for (const Attack& at : attacks) {
      if (!included.count(at.target) || included.count(at.attacker)) continue;
      auto it = pool.find(at.attacker);
      if (it == pool.end() || !it->second->is_epistemic()) continue;
      included.insert(at.attacker);
      changed = true;
    }
    for (const std::string& id : std::set<std::string>(included)) {
      for (const Argument* sub : sub_arguments(*pool.at(id), universe))
        if (included.insert(sub->id).second) changed = true;
    }
  }
  return included;
}

}  // namespace

ArgumentationFramework assemble_af(Stage stage, const std::vector<Argument>& stage_args,
                                   const std::vector<Argument>& epistemic_pool, const std::vector<Attack>& attacks) {
  std::map<std::string, const Argument*> pool;
  for (const Argument& a : epistemic_pool) pool.emplace(a.id, &a);
  for (const Argument& a : stage_args) pool.emplace(a.id, &a);

  std::set<std::string> seed;
  for (const Argument& a : stage_args) seed.insert(a.id);
  const std::set<std::string> ids = close_over(std::move(seed), pool, attacks);

  ArgumentationFramework af;
  af.stage = stage;
  for (const std::string& id : ids) af.args.push_back(*pool.at(id));
  af.attacks = restrict_attacks(attacks, ids);
  return af;
}

ArgumentationFramework sub_af(const ArgumentationFramework& af, const Literal& g) {
  std::map<std::string, const Argument*> pool;
  for (const Argument& a : af.args) pool.emplace(a.id, &a);

  std::set<std::string> seed;
  for (const Argument& a : af.args)
    if (!a.is_epistemic() && a.goal && *a.goal == g) seed.insert(a.id);

  ArgumentationFramework out;
  out.stage = af.stage;
  if (seed.empty()) return out;
  const std::set<std::string> ids = close_over(std::move(seed), pool, af.attacks);
  for (const std::string& id : ids) out.args.push_back(*pool.at(id));
  out.attacks = restrict_attacks(af.attacks, ids);
  return out;
}

std::string export_af(const ArgumentationFramework& af) {
  std::ostringstream os;
  for (const Argument& a : af.args) os << "arg " << a.id << "\n";
  for (const Attack& at : af.attacks) os << "att " << at.attacker << " " << at.target << "\n";
  return os.str();
}

namespace dung {

Graph::Graph(std::size_t n, const std::vector<Edge>& edges) : attackers_(n), matrix_(n * n, false) {
  for (const auto& [a, b] : edges) {
    if (matrix_[a * n + b]) continue;
    matrix_[a * n + b] = true;
    attackers_[b].push_back(a);
  }
}

bool conflict_free(const Graph& g, const Set& s) {
  for (std::size_t a = 0; a < g.size(); ++a) {
    if (!s[a]) continue;
    for (std::size_t b : g.attackers(a))
      if (s[b]) return false;
  }
  return true;
}

bool defends(const Graph& g, const Set& s, std::size_t a) {
  for (std::size_t b : g.attackers(a)) {
    bool countered = false;
    for (std::size_t c : g.attackers(b))
      if (s[c]) {
        countered = true;
        break;
      }
    if (!countered) return false;
  }
  return true;
}

Set characteristic(const Graph& g, const Set& s) {
  Set out(g.size(), false);
  for (std::size_t a = 0; a < g.size(); ++a) out[a] = defends(g, s, a);
  return out;
}

Set grounded(const Graph& g) {
  Set s(g.size(), false);
  while (true) {
    Set next = characteristic(g, s);
    if (next == s) return s;
    s = std::move(next);
  }
}

namespace {

struct CompleteSearch {
  const Graph& g;
  std::vector<std::size_t> open;  // undecided after the grounded labelling
  Set in;
  std::vector<Set> found;

  void run(std::size_t k) {
    if (k == open.size()) {
      if (characteristic(g, in) == in) found.push_back(in);
      return;
    }
    const std::size_t a = open[k];
    bool compatible = !g.attacks(a, a);
    for (std::size_t b = 0; compatible && b < g.size(); ++b)
      if (in[b] && (g.attacks(a, b) || g.attacks(b, a))) compatible = false;
    if (compatible) {
      in[a] = true;
      run(k + 1);
      in[a] = false;
    }
    run(k + 1);
  }
};

bool subset_of(const Set& a, const Set& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && !b[i]) return false;
  return true;
}

}  // namespace

// Every complete extension contains the grounded one and excludes what it
// attacks, so only the remaining arguments are searched.
std::vector<Set> complete(const Graph& g) {
  const Set base = grounded(g);
  CompleteSearch search{g, {}, base, {}};
  for (std::size_t a = 0; a < g.size(); ++a) {
    if (base[a]) continue;
    bool attacked = false;
    for (std::size_t b : g.attackers(a))
      if (base[b]) attacked = true;
    if (!attacked) search.open.push_back(a);
  }
  search.run(0);
  return search.found;
}

std::vector<Set> preferred(const Graph& g) {
  const std::vector<Set> all = complete(g);
  std::vector<Set> out;
  for (const Set& s : all) {
    bool maximal = true;
    for (const Set& t : all)
      if (t != s && subset_of(s, t)) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(s);
  }
  return out;
}

std::vector<Set> stable(const Graph& g) {
  std::vector<Set> out;
  for (const Set& s : preferred(g)) {
    bool covers = true;
    for (std::size_t a = 0; a < g.size() && covers; ++a) {
      if (s[a]) continue;
      covers = std::any_of(g.attackers(a).begin(), g.attackers(a).end(), [&](std::size_t b) { return s[b]; });
    }
    if (covers) out.push_back(s);
  }
  return out;
}

std::vector<Set> solve(const Graph& g, Semantics semantics) {
  switch (semantics) {
    case Semantics::complete: return complete(g);
    case Semantics::preferred: return preferred(g);
    case Semantics::grounded: return {grounded(g)};
    case Semantics::stable: return stable(g);
  }
  return {};
}

}  // namespace dung

std::vector<Extension> extensions(const ArgumentationFramework& af, Semantics semantics) {
  std::map<std::string_view, std::size_t> index;
  for (std::size_t i = 0; i < af.args.size(); ++i) index.emplace(af.args[i].id, i);
  std::vector<dung::Edge> edges;
  for (const Attack& at : af.attacks) edges.emplace_back(index.at(at.attacker), index.at(at.target));

  std::vector<Extension> out;
  for (const dung::Set& s : dung::solve(dung::Graph(af.args.size(), edges), semantics)) {
    Extension e;
    e.semantics = semantics;
    for (std::size_t i = 0; i < s.size(); ++i)
      if (s[i]) e.members.push_back(af.args[i].id);
    out.push_back(std::move(e));
  }
  std::sort(out.begin(), out.end(), [](const Extension& a, const Extension& b) { return a.members < b.members; });
  return out;
}

Solution solve_with_fallback(const ArgumentationFramework& af, Semantics requested) {
  Solution s{extensions(af, requested), requested, false};
  if (s.extensions.empty()) {
    s.extensions = extensions(af, Semantics::preferred);
    s.semantics_used = Semantics::preferred;
    s.fell_back = true;
  }
  return s;
}

Extension select_extension(const std::vector<Extension>& exts, Stage stage, const ArgumentationFramework& af) {
  if (exts.empty()) throw EmptySelection("no extension to select from");
  const Category wanted = category_of(stage);
  auto count = [&](const Extension& e) {
    return std::count_if(e.members.begin(), e.members.end(), [&](const std::string& id) {
      const Argument* a = af.find(id);
      return a && a->category == wanted;
    });
  };
  const bool fewest = stage == Stage::evaluation;
  const Extension* best = &exts.front();
  for (const Extension& e : exts) {
    const auto c = count(e);
    const auto b = count(*best);
    const bool better = fewest ? c < b : c > b;
    if (better || (c == b && e.members < best->members)) best = &e;
  }
  return *best;
}

}  // namespace bbgp
