#include "bbgp/pipeline.hpp"

#include <algorithm>

#include "bbgp/errors.hpp"

namespace bbgp {

std::string_view to_string(GoalStatus s) {
  switch (s) {
    case GoalStatus::active: return "ac";
    case GoalStatus::pursuable: return "pu";
    case GoalStatus::chosen: return "ch";
    case GoalStatus::executive: return "ex";
    case GoalStatus::not_active: return "not_ac";
    case GoalStatus::not_pursuable: return "not_pu";
    case GoalStatus::not_chosen: return "not_ch";
    case GoalStatus::not_executive: return "not_ex";
  }
  return "?";
}

bool is_positive(GoalStatus s) {
  return s == GoalStatus::active || s == GoalStatus::pursuable || s == GoalStatus::chosen ||
         s == GoalStatus::executive;
}

GoalStatus status_for(Stage stage, bool passed) {
  switch (stage) {
    case Stage::activation: return passed ? GoalStatus::active : GoalStatus::not_active;
    case Stage::evaluation: return passed ? GoalStatus::pursuable : GoalStatus::not_pursuable;
    case Stage::deliberation: return passed ? GoalStatus::chosen : GoalStatus::not_chosen;
    case Stage::checking: return passed ? GoalStatus::executive : GoalStatus::not_executive;
  }
  return GoalStatus::not_active;
}

PipelineState::PipelineState(Theory theory, PipelineConfig config)
    : theory_(std::move(theory)), config_(config), epistemic_(build_epistemic(theory_)) {
  for (const Argument& a : epistemic_) arguments_.emplace(a.id, a);
}

const std::set<Literal>& PipelineState::goals(GoalStatus positive) const {
  return const_cast<PipelineState*>(this)->goals_mut(positive);
}

std::set<Literal>& PipelineState::goals_mut(GoalStatus positive) {
  switch (positive) {
    case GoalStatus::active: return active_;
    case GoalStatus::pursuable: return pursuable_;
    case GoalStatus::chosen: return chosen_;
    case GoalStatus::executive: return executive_;
    default: throw std::invalid_argument("goal sets exist only for positive statuses");
  }
}

const GoalMemory* PipelineState::memory(const Literal& goal) const {
  auto it = memories_.find(goal);
  return it == memories_.end() ? nullptr : &it->second;
}

const StageResult* PipelineState::stage(Stage s) const {
  auto it = stages_.find(s);
  return it == stages_.end() ? nullptr : &it->second;
}

const Argument* PipelineState::argument(std::string_view id) const {
  auto it = arguments_.find(std::string(id));
  return it == arguments_.end() ? nullptr : &it->second;
}

namespace {

std::optional<Stage> following(Stage s) {
  switch (s) {
    case Stage::activation: return Stage::evaluation;
    case Stage::evaluation: return Stage::deliberation;
    case Stage::deliberation: return Stage::checking;
    case Stage::checking: return std::nullopt;
  }
  return std::nullopt;
}

Extension restrict(const Extension& e, const ArgumentationFramework& af) {
  Extension out;
  out.semantics = e.semantics;
  for (const std::string& id : e.members)
    if (af.contains(id)) out.members.push_back(id);
  return out;
}

}  // namespace

PipelineState run_stage(PipelineState state, Stage stage) {
  if (state.next_ != stage) {
    throw StageOrderError("cannot run " + std::string(to_string(stage)) + " stage now; expected " +
                          (state.next_ ? std::string(to_string(*state.next_)) : std::string("no further stage")));
  }

  StageResult result;
  result.stage = stage;
  switch (stage) {
    case Stage::activation: result.candidates = activation_candidates(state.theory_); break;
    case Stage::evaluation: result.candidates = state.active_; break;
    case Stage::deliberation: result.candidates = state.pursuable_; break;
    case Stage::checking: result.candidates = state.chosen_; break;
  }

  const std::vector<Argument> stage_args = build_stage(state.theory_, stage, result.candidates);
  std::vector<Argument> pool = state.epistemic_;
  pool.insert(pool.end(), stage_args.begin(), stage_args.end());
  const std::vector<Attack> attacks = compute_attacks(pool);
  result.af = assemble_af(stage, stage_args, state.epistemic_, attacks);

  Solution solved = solve_with_fallback(result.af, state.config_.semantics);
  result.extensions = std::move(solved.extensions);
  result.semantics_used = solved.semantics_used;
  result.fell_back = solved.fell_back;
  if (result.fell_back)
    state.log_.push_back(std::string(tag(stage)) + ": " + std::string(to_string(state.config_.semantics)) +
                         " semantics gave no extension; using preferred");
  result.selected = select_extension(result.extensions, stage, result.af);

  const Category category = category_of(stage);
  const GoalStatus previous = stage == Stage::activation ? GoalStatus::active
                              : stage == Stage::evaluation ? GoalStatus::active
                              : stage == Stage::deliberation ? GoalStatus::pursuable
                                                             : GoalStatus::chosen;
  for (const Literal& g : result.candidates) {
    bool has_argument = false;
    bool accepted = false;
    for (const Argument& a : result.af.args) {
      if (a.category != category || !a.goal || *a.goal != g) continue;
      has_argument = true;
      if (result.selected.contains(a.id)) accepted = true;
    }
    // Activation records only goals some activation argument spoke for.
    if (stage == Stage::activation && !has_argument) continue;

    // Evaluation passes by the absence of an accepted objection.
    const bool passed = stage == Stage::evaluation ? !accepted : accepted;
    MemoryRecord record;
    record.stage = stage;
    record.status = status_for(stage, passed);
    record.reason = sub_af(result.af, g);
    record.selected = restrict(result.selected, record.reason);

    GoalMemory& memory = state.memories_[g];
    memory.goal = g;
    memory.records.push_back(std::move(record));

    if (passed) {
      if (stage != Stage::activation) state.goals_mut(previous).erase(g);
      state.goals_mut(status_for(stage, true)).insert(g);
    }
    state.log_.push_back(std::string(tag(stage)) + ": " + to_string(g) + " -> " +
                         std::string(to_string(status_for(stage, passed))));
  }

  for (const Argument& a : stage_args) state.arguments_.emplace(a.id, a);
  state.stages_[stage] = std::move(result);
  state.next_ = following(stage);
  return state;
}

PipelineState run_pipeline(Theory theory, PipelineConfig config) {
  PipelineState state(std::move(theory), config);
  for (Stage s : kStages) state = run_stage(std::move(state), s);
  check_invariants(state);
  return state;
}

namespace {

bool is_subgraph(const ArgumentationFramework& sub, const ArgumentationFramework& af) {
  for (const Argument& a : sub.args)
    if (!af.contains(a.id)) return false;
  for (const Attack& at : sub.attacks)
    if (!std::binary_search(af.attacks.begin(), af.attacks.end(), at)) return false;
  return true;
}

int rank(GoalStatus s) {
  switch (s) {
    case GoalStatus::active: return 0;
    case GoalStatus::pursuable: return 1;
    case GoalStatus::chosen: return 2;
    case GoalStatus::executive: return 3;
    default: return -1;
  }
}

}  // namespace

void check_invariants(const PipelineState& state) {
  auto fail = [](const std::string& what) { throw InvariantError(what); };
  const GoalStatus positives[] = {GoalStatus::active, GoalStatus::pursuable, GoalStatus::chosen,
                                  GoalStatus::executive};

  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      for (const Literal& g : state.goals(positives[i]))
        if (state.goals(positives[j]).count(g))
          fail("goal " + to_string(g) + " is both " + std::string(to_string(positives[i])) + " and " +
               std::string(to_string(positives[j])));

  for (GoalStatus x : positives) {
    for (const Literal& g : state.goals(x)) {
      const GoalMemory* m = state.memory(g);
      std::optional<GoalStatus> last;
      if (m)
        for (const MemoryRecord& r : m->records)
          if (is_positive(r.status)) last = r.status;
      if (last != x) fail("goal " + to_string(g) + " has no memory record for its status");
    }
  }

  for (const auto& [goal, memory] : state.memories()) {
    int expected = 0;
    int previous_stage = -1;
    for (const MemoryRecord& r : memory.records) {
      if (static_cast<int>(r.stage) <= previous_stage) fail("records of " + to_string(goal) + " out of stage order");
      previous_stage = static_cast<int>(r.stage);
      if (is_positive(r.status)) {
        if (rank(r.status) != expected) fail("goal " + to_string(goal) + " skipped a status");
        ++expected;
      }
      const StageResult* sr = state.stage(r.stage);
      if (!sr || !is_subgraph(r.reason, sr->af))
        fail("memory of " + to_string(goal) + " is not a sub-AF of the " + std::string(tag(r.stage)) + " AF");
      for (const std::string& id : r.selected.members)
        if (!r.reason.contains(id)) fail("selected argument outside its reason for " + to_string(goal));
      if (is_positive(r.status) && r.stage != Stage::evaluation) {
        const bool backed = std::any_of(r.selected.members.begin(), r.selected.members.end(), [&](const std::string& id) {
          const Argument* a = r.reason.find(id);
          return a && !a->is_epistemic() && a->goal == goal;
        });
        if (!backed) fail("positive record of " + to_string(goal) + " lacks an accepted stage argument");
      }
    }
  }

  for (const auto& [stage, sr] : state.stages()) {
    for (const Attack& at : sr.af.attacks) {
      if (!sr.af.contains(at.attacker) || !sr.af.contains(at.target))
        fail("attack endpoint outside the " + std::string(tag(stage)) + " AF");
      if (!sr.af.find(at.attacker)->is_epistemic()) fail("a stage argument attacks in the " + std::string(tag(stage)) + " AF");
    }
    for (const Attack& at : sr.af.attacks)
      if (sr.selected.contains(at.attacker) && sr.selected.contains(at.target))
        fail("selected extension of the " + std::string(tag(stage)) + " AF is not conflict-free");
  }
}

std::map<std::string, std::string> argument_aliases(const PipelineState& state) {
  std::map<Category, std::vector<std::pair<std::string, std::string>>> by_category;
  for (const auto& [id, a] : state.arguments()) by_category[a.category].emplace_back(canonical_text(a), id);
  std::map<std::string, std::string> out;
  for (auto& [category, entries] : by_category) {
    std::sort(entries.begin(), entries.end());
    const std::string& first = entries.front().second;
    const std::string prefix = first.substr(0, first.find(':'));
    for (std::size_t i = 0; i < entries.size(); ++i) out[entries[i].second] = prefix + std::to_string(i + 1);
  }
  return out;
}

}  // namespace bbgp
