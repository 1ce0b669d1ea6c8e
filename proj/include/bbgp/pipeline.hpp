// The four-stage goal-processing pipeline and per-goal memories.
#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "bbgp/argument.hpp"
#include "bbgp/semantics.hpp"
#include "bbgp/theory.hpp"

namespace bbgp {

enum class GoalStatus { active, pursuable, chosen, executive, not_active, not_pursuable, not_chosen, not_executive };

/// ac, pu, ch, ex, not_ac, ...
std::string_view to_string(GoalStatus s);
bool is_positive(GoalStatus s);
/// Status reached (positive) or denied (negative) at a stage.
GoalStatus status_for(Stage stage, bool passed);

struct MemoryRecord {
  Stage stage = Stage::activation;
  GoalStatus status = GoalStatus::active;
  ArgumentationFramework reason;  // sub-AF of the stage AF for this goal
  Extension selected;             // the stage's selected extension, restricted to `reason`
};

struct GoalMemory {
  Literal goal;
  std::vector<MemoryRecord> records;  // in stage order

  std::size_t num_records() const { return records.size(); }
};

struct StageResult {
  Stage stage = Stage::activation;
  std::set<Literal> candidates;
  ArgumentationFramework af;
  std::vector<Extension> extensions;
  Extension selected;
  Semantics semantics_used = Semantics::preferred;
  bool fell_back = false;  // stable yielded nothing; preferred was used instead
};

struct PipelineConfig {
  Semantics semantics = Semantics::preferred;
};

class PipelineState {
 public:
  explicit PipelineState(Theory theory, PipelineConfig config = {});

  const Theory& theory() const { return theory_; }
  const PipelineConfig& config() const { return config_; }

  const std::set<Literal>& goals(GoalStatus positive) const;
  const std::set<Literal>& active() const { return active_; }
  const std::set<Literal>& pursuable() const { return pursuable_; }
  const std::set<Literal>& chosen() const { return chosen_; }
  const std::set<Literal>& executive() const { return executive_; }

  const std::map<Literal, GoalMemory>& memories() const { return memories_; }
  const GoalMemory* memory(const Literal& goal) const;

  const std::map<Stage, StageResult>& stages() const { return stages_; }
  const StageResult* stage(Stage s) const;

  /// Epistemic arguments of the theory, sorted by id.
  const std::vector<Argument>& epistemic() const { return epistemic_; }
  /// Every argument built so far, keyed by id.
  const std::map<std::string, Argument>& arguments() const { return arguments_; }
  const Argument* argument(std::string_view id) const;

  const std::vector<std::string>& log() const { return log_; }

  /// The stage run_stage() accepts next; nullopt once checking has run.
  std::optional<Stage> next_stage() const { return next_; }

  friend PipelineState run_stage(PipelineState state, Stage stage);

 private:
  std::set<Literal>& goals_mut(GoalStatus positive);

  Theory theory_;
  PipelineConfig config_;
  std::set<Literal> active_, pursuable_, chosen_, executive_;
  std::map<Literal, GoalMemory> memories_;
  std::map<Stage, StageResult> stages_;
  std::vector<Argument> epistemic_;
  std::map<std::string, Argument> arguments_;
  std::vector<std::string> log_;
  std::optional<Stage> next_ = Stage::activation;
};

/// Runs one stage. Throws StageOrderError unless `stage` is state.next_stage().
PipelineState run_stage(PipelineState state, Stage stage);

/// Runs all four stages in order and checks the result with check_invariants().
PipelineState run_pipeline(Theory theory, PipelineConfig config = {});

/// Throws InvariantError describing the first violated invariant.
void check_invariants(const PipelineState& state);

/// Human aliases (ep1, ac1, ...) numbered per category in canonical order.
std::map<std::string, std::string> argument_aliases(const PipelineState& state);

/// Canonical JSON run report (sorted keys, two-space indent, trailing newline).
std::string run_report(const PipelineState& state);

}  // namespace bbgp
