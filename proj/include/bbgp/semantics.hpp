// Stage argumentation frameworks and Dung extension semantics.
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bbgp/argument.hpp"

namespace bbgp {

enum class Semantics { complete, preferred, grounded, stable };

std::string_view to_string(Semantics s);
std::optional<Semantics> semantics_from_string(std::string_view name);

struct ArgumentationFramework {
  Stage stage = Stage::activation;
  std::vector<Argument> args;   // sorted by id
  std::vector<Attack> attacks;  // sorted, endpoints within args

  const Argument* find(std::string_view id) const;
  bool contains(std::string_view id) const { return find(id) != nullptr; }
  bool empty() const { return args.empty(); }
};

struct Extension {
  std::vector<std::string> members;  // sorted
  Semantics semantics = Semantics::preferred;

  bool contains(std::string_view id) const;
  friend bool operator==(const Extension& a, const Extension& b) { return a.members == b.members; }
};

/// Stage AF over the stage arguments: adds every epistemic argument that attacks
/// an included argument (transitively) and every sub-argument of an included
/// argument, then keeps the attacks among the result.
ArgumentationFramework assemble_af(Stage stage, const std::vector<Argument>& stage_args,
                                   const std::vector<Argument>& epistemic_pool, const std::vector<Attack>& attacks);

/// Extensions sorted lexicographically by their member lists.
std::vector<Extension> extensions(const ArgumentationFramework& af, Semantics semantics);

/// Extensions under `requested`, or under preferred semantics when `requested`
/// yields none (only stable can).
struct Solution {
  std::vector<Extension> extensions;
  Semantics semantics_used = Semantics::preferred;
  bool fell_back = false;
};
Solution solve_with_fallback(const ArgumentationFramework& af, Semantics requested);

/// Picks one extension. Evaluation: fewest evaluation arguments. Other stages:
/// most stage arguments. Ties go to the lexicographically smallest member list.
/// Throws EmptySelection when `exts` is empty.
Extension select_extension(const std::vector<Extension>& exts, Stage stage, const ArgumentationFramework& af);

/// The part of `af` that concerns goal `g`: its stage arguments, their
/// epistemic attackers (transitively) and the sub-arguments of everything
/// included. Attacks are those of `af` among the kept arguments.
ArgumentationFramework sub_af(const ArgumentationFramework& af, const Literal& g);

/// Line format: `arg <id>` per argument, then `att <attacker> <target>`.
std::string export_af(const ArgumentationFramework& af);

/// Index-level solvers over an abstract attack graph.
namespace dung {

using Edge = std::pair<std::size_t, std::size_t>;
using Set = std::vector<bool>;

class Graph {
 public:
  Graph(std::size_t n, const std::vector<Edge>& edges);

  std::size_t size() const { return attackers_.size(); }
  const std::vector<std::size_t>& attackers(std::size_t a) const { return attackers_[a]; }
  bool attacks(std::size_t a, std::size_t b) const { return matrix_[a * size() + b]; }

 private:
  std::vector<std::vector<std::size_t>> attackers_;
  std::vector<bool> matrix_;
};

bool conflict_free(const Graph& g, const Set& s);
bool defends(const Graph& g, const Set& s, std::size_t a);
/// {a | s defends a}
Set characteristic(const Graph& g, const Set& s);

Set grounded(const Graph& g);
std::vector<Set> complete(const Graph& g);
std::vector<Set> preferred(const Graph& g);
std::vector<Set> stable(const Graph& g);

std::vector<Set> solve(const Graph& g, Semantics semantics);

}  // namespace dung

}  // namespace bbgp
