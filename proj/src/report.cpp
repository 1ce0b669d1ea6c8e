#include "bbgp/pipeline.hpp"
#include "json_io.hpp"

namespace bbgp {

std::string run_report(const PipelineState& state) {
  using detail::Json;
  const auto aliases = argument_aliases(state);

  auto literal_list = [](const auto& lits) {
    Json out = Json::array();
    for (const Literal& l : lits) out.push_back(to_string(l));
    return out;
  };

  Json report;
  report["semantics"] = std::string(to_string(state.config().semantics));
  report["goals"] = {{"sleeping", literal_list(state.theory().sleeping_goals())},
                     {"active", literal_list(state.active())},
                     {"pursuable", literal_list(state.pursuable())},
                     {"chosen", literal_list(state.chosen())},
                     {"executive", literal_list(state.executive())}};

  Json arguments = Json::object();
  for (const auto& [id, a] : state.arguments()) arguments[id] = detail::argument_json(a, aliases);
  report["arguments"] = arguments;

  Json stages = Json::object();
  for (const auto& [stage, sr] : state.stages()) {
    Json exts = Json::array();
    for (const Extension& e : sr.extensions) exts.push_back(e.members);
    Json s = detail::af_json(sr.af);
    s["candidates"] = literal_list(sr.candidates);
    s["extensions"] = exts;
    s["selected"] = sr.selected.members;
    s["semantics_used"] = std::string(to_string(sr.semantics_used));
    s["fallback"] = sr.fell_back;
    stages[std::string(tag(stage))] = s;
  }
  report["stages"] = stages;

  Json memories = Json::object();
  for (const auto& [goal, memory] : state.memories()) {
    Json records = Json::array();
    for (const MemoryRecord& r : memory.records) {
      records.push_back({{"stage", std::string(tag(r.stage))},
                         {"status", std::string(to_string(r.status))},
                         {"reason", detail::af_json(r.reason)},
                         {"selected", r.selected.members}});
    }
    memories[to_string(goal)] = records;
  }
  report["memories"] = memories;
  report["log"] = state.log();
  report["warnings"] = state.theory().warnings();
  return report.dump(2) + "\n";
}

}  // namespace bbgp
