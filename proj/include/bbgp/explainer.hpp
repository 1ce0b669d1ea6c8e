// Partial and complete explanations built from goal memories.
//
// A partial explanation keeps, per memory record, only the arguments of the
// selected extension. A complete explanation keeps each record's whole sub-AF,
// defeated counter-arguments and attacks included. Records stay separated by
// stage; no attacks are synthesized between records.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bbgp/pipeline.hpp"

namespace bbgp {

enum class Mode { partial, complete };
enum class Polarity { why, why_not };

std::string_view to_string(Mode m);
std::optional<Mode> mode_from_string(std::string_view name);

struct ExplanationSection {
  Stage stage = Stage::activation;
  std::size_t record = 0;  // index into the goal's memory
  GoalStatus status = GoalStatus::active;
  std::vector<std::string> arguments;  // sorted ids
  std::vector<Attack> attacks;         // empty in partial mode
  std::vector<std::string> accepted;   // the record's selected extension
};

struct Explanation {
  Literal goal;
  Mode mode = Mode::partial;
  Polarity polarity = Polarity::why;
  std::vector<ExplanationSection> sections;
  std::map<std::string, Argument> arguments;     // every argument mentioned
  std::map<std::string, std::string> aliases;    // id -> ep1, ac2, ...

  /// Union of the section argument sets.
  std::vector<std::string> argument_ids() const;
  /// (stage, record index) for every contributing record.
  std::vector<std::pair<Stage, std::size_t>> provenance() const;
  bool empty() const;
};

/// Throws UnknownGoal when `g` has no memory, or (for why_not) no negative record.
Explanation explain(const PipelineState& state, const Literal& g, Mode mode, Polarity polarity = Polarity::why);

/// Prose templates keyed by rule or fact id.
struct Templates {
  std::map<std::string, std::string> by_id;
  std::map<Literal, std::string> fact_ids;

  static Templates from(const Theory& theory);
};

std::string render(const Explanation& e, const Templates& templates);

/// JSON document with the structured explanation and its prose.
std::string explanation_document(const Explanation& e, const Templates& templates);

}  // namespace bbgp
