// bbgp: run the goal-processing pipeline over a theory file, explain goals,
// and export stage argumentation frameworks.
//
// Exit codes: 0 success, 1 input error (unreadable or malformed theory, bad
// query literal, bad flags), 2 internal invariant violation, 3 unknown goal.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "bbgp/errors.hpp"
#include "bbgp/explainer.hpp"
#include "bbgp/pipeline.hpp"

namespace {

struct RunConfig {
  std::string theory_path;
  std::string semantics = "preferred";
  std::string out_path;
  bool text = false;
  // explain
  std::string goal;
  std::string mode = "partial";
  bool why_not = false;
  // export-af
  std::string stage = "ac";
};

int emit(const RunConfig& cfg, const std::string& payload) {
  if (cfg.out_path.empty()) {
    std::cout << payload;
    return 0;
  }
  std::ofstream out(cfg.out_path, std::ios::binary);
  if (!out) {
    std::cerr << "bbgp: cannot write '" << cfg.out_path << "'\n";
    return 1;
  }
  out << payload;
  return 0;
}

bbgp::PipelineState run(const RunConfig& cfg) {
  bbgp::Theory theory = bbgp::load_theory_file(cfg.theory_path);
  for (const std::string& w : theory.warnings()) std::cerr << cfg.theory_path << ":" << w << "\n";
  return bbgp::run_pipeline(std::move(theory), {*bbgp::semantics_from_string(cfg.semantics)});
}

std::string summary(const bbgp::PipelineState& state) {
  std::string out;
  auto line = [&](const char* name, const std::set<bbgp::Literal>& goals) {
    out += name;
    out += ":";
    for (const bbgp::Literal& g : goals) out += " " + bbgp::to_string(g);
    out += "\n";
  };
  line("active", state.active());
  line("pursuable", state.pursuable());
  line("chosen", state.chosen());
  line("executive", state.executive());
  for (const auto& [goal, memory] : state.memories()) {
    out += bbgp::to_string(goal) + ":";
    for (const bbgp::MemoryRecord& r : memory.records) out += " " + std::string(bbgp::to_string(r.status));
    out += "\n";
  }
  return out;
}

int cmd_run(const RunConfig& cfg) {
  const bbgp::PipelineState state = run(cfg);
  return emit(cfg, cfg.text ? summary(state) : bbgp::run_report(state));
}

int cmd_explain(const RunConfig& cfg) {
  bbgp::Literal goal;
  try {
    goal = bbgp::parse_literal(cfg.goal);
  } catch (const bbgp::ParseError& e) {
    std::cerr << "bbgp: bad --goal: " << e.what() << "\n";
    return 1;
  }
  if (!goal.is_ground()) {
    std::cerr << "bbgp: --goal must be a ground literal\n";
    return 1;
  }
  const bbgp::PipelineState state = run(cfg);
  const auto explanation = bbgp::explain(state, goal, *bbgp::mode_from_string(cfg.mode),
                                         cfg.why_not ? bbgp::Polarity::why_not : bbgp::Polarity::why);
  const auto templates = bbgp::Templates::from(state.theory());
  return emit(cfg, cfg.text ? bbgp::render(explanation, templates)
                            : bbgp::explanation_document(explanation, templates));
}

int cmd_export_af(const RunConfig& cfg) {
  const bbgp::PipelineState state = run(cfg);
  const bbgp::StageResult* sr = state.stage(*bbgp::stage_from_tag(cfg.stage));
  return emit(cfg, sr ? bbgp::export_af(sr->af) : std::string());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Belief-based goal processing with argumentation-backed explanations"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&](CLI::App* sub) {
    sub->add_option("theory", cfg.theory_path, "Theory file (.bbgp)")->required();
    sub->add_option("--semantics", cfg.semantics, "Extension semantics")
        ->check(CLI::IsMember({"preferred", "grounded", "stable", "complete"}));
    sub->add_option("--out", cfg.out_path, "Write output to this file instead of standard output");
  };

  CLI::App* run_cmd = app.add_subcommand("run", "Run all stages and print the run report");
  common(run_cmd);
  run_cmd->add_flag("--text", cfg.text, "Print a short plain-text summary");

  CLI::App* explain_cmd = app.add_subcommand("explain", "Explain a goal's status");
  common(explain_cmd);
  explain_cmd->add_option("--goal", cfg.goal, "Ground goal literal, e.g. \"take_hospital(man_32)\"")->required();
  explain_cmd->add_option("--mode", cfg.mode, "partial or complete")->check(CLI::IsMember({"partial", "complete"}));
  explain_cmd->add_flag("--why-not", cfg.why_not, "Explain only the statuses the goal failed to reach");
  explain_cmd->add_flag("--text", cfg.text, "Print prose only");

  CLI::App* export_cmd = app.add_subcommand("export-af", "Print a stage AF as arg/att lines");
  common(export_cmd);
  export_cmd->add_option("--stage", cfg.stage, "ac, ev, de or ck")->check(CLI::IsMember({"ac", "ev", "de", "ck"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (run_cmd->parsed()) return cmd_run(cfg);
    if (explain_cmd->parsed()) return cmd_explain(cfg);
    return cmd_export_af(cfg);
  } catch (const bbgp::TheoryError& e) {
    std::cerr << cfg.theory_path << (e.line() > 0 ? ":" : ": ") << e.what() << "\n";
    return 1;
  } catch (const bbgp::UnknownGoal& e) {
    std::cerr << "bbgp: " << e.what() << "\n";
    return 3;
  } catch (const bbgp::InvariantError& e) {
    std::cerr << "bbgp: invariant violated: " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    std::cerr << "bbgp: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "bbgp: internal error: " << e.what() << "\n";
    return 2;
  }
}
