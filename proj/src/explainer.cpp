#include "bbgp/explainer.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "bbgp/errors.hpp"
#include "json_io.hpp"

namespace bbgp {

std::string_view to_string(Mode m) { return m == Mode::partial ? "partial" : "complete"; }

std::optional<Mode> mode_from_string(std::string_view name) {
  if (name == "partial") return Mode::partial;
  if (name == "complete") return Mode::complete;
  return std::nullopt;
}

std::vector<std::string> Explanation::argument_ids() const {
  std::set<std::string> ids;
  for (const ExplanationSection& s : sections) ids.insert(s.arguments.begin(), s.arguments.end());
  return {ids.begin(), ids.end()};
}

std::vector<std::pair<Stage, std::size_t>> Explanation::provenance() const {
  std::vector<std::pair<Stage, std::size_t>> out;
  for (const ExplanationSection& s : sections) out.emplace_back(s.stage, s.record);
  return out;
}

bool Explanation::empty() const {
  return std::all_of(sections.begin(), sections.end(), [](const ExplanationSection& s) { return s.arguments.empty(); });
}

Explanation explain(const PipelineState& state, const Literal& g, Mode mode, Polarity polarity) {
  const GoalMemory* memory = state.memory(g);
  if (!memory) throw UnknownGoal("goal " + to_string(g) + " was never a candidate at any stage");

  Explanation e;
  e.goal = g;
  e.mode = mode;
  e.polarity = polarity;
  const auto aliases = argument_aliases(state);

  for (std::size_t i = 0; i < memory->records.size(); ++i) {
    const MemoryRecord& r = memory->records[i];
    if (polarity == Polarity::why_not && is_positive(r.status)) continue;
    ExplanationSection s;
    s.stage = r.stage;
    s.record = i;
    s.status = r.status;
    s.accepted = r.selected.members;
    if (mode == Mode::partial) {
      s.arguments = r.selected.members;
    } else {
      for (const Argument& a : r.reason.args) s.arguments.push_back(a.id);
      s.attacks = r.reason.attacks;
    }
    for (const std::string& id : s.arguments) {
      e.arguments.emplace(id, *r.reason.find(id));
      e.aliases.emplace(id, aliases.at(id));
    }
    e.sections.push_back(std::move(s));
  }
  if (e.sections.empty())
    throw UnknownGoal("goal " + to_string(g) + " was never rejected at any stage it was considered for");
  return e;
}

Templates Templates::from(const Theory& theory) {
  Templates t;
  t.by_id = theory.templates();
  for (const Fact& f : theory.facts()) t.fact_ids.emplace(f.literal, f.id);
  return t;
}

namespace {

std::string term_text(const Term& t) {
  if (auto inner = unquote(t)) return to_string(*inner);
  return to_string(t);
}

std::string fill(const std::string& text, const Substitution& s) {
  std::string out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == '{') {
      std::size_t close = text.find('}', i);
      if (close != std::string::npos) {
        auto it = s.find(text.substr(i + 1, close - i - 1));
        if (it != s.end()) {
          out += term_text(it->second);
          i = close + 1;
          continue;
        }
      }
    }
    out += text[i++];
  }
  return out;
}

std::string clause(const Argument& a, const Templates& templates) {
  const Step& last = a.support.last();
  if (last.is_fact()) {
    if (auto id = templates.fact_ids.find(last.literal); id != templates.fact_ids.end())
      if (auto t = templates.by_id.find(id->second); t != templates.by_id.end()) return t->second;
    return to_string(last.literal);
  }
  const GroundRule& r = *last.rule;
  if (auto t = templates.by_id.find(r.origin); t != templates.by_id.end()) return fill(t->second, r.substitution);
  std::string body;
  for (std::size_t i = 0; i < r.body.size(); ++i) {
    if (i) body += " and ";
    body += to_string(r.body[i]);
  }
  return "because " + body + " therefore " + to_string(r.head);
}

std::string_view status_word(GoalStatus s) {
  switch (s) {
    case GoalStatus::active:
    case GoalStatus::not_active: return "active";
    case GoalStatus::pursuable:
    case GoalStatus::not_pursuable: return "pursuable";
    case GoalStatus::chosen:
    case GoalStatus::not_chosen: return "chosen";
    case GoalStatus::executive:
    case GoalStatus::not_executive: return "executive";
  }
  return "?";
}

// facts, derived beliefs, counter-arguments, then stage arguments
int group(const Argument& a, bool accepted) {
  if (!a.is_epistemic()) return 3;
  if (!accepted) return 2;
  return a.support.last().is_fact() ? 0 : 1;
}

std::string tags(const std::vector<std::string>& ids, const std::map<std::string, std::string>& aliases) {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += ", ";
    out += "[" + aliases.at(ids[i]) + "]";
  }
  return out;
}

}  // namespace

std::string render(const Explanation& e, const Templates& templates) {
  if (e.empty()) return "no reasons recorded.\n";

  std::ostringstream os;
  for (const ExplanationSection& s : e.sections) {
    os << to_string(e.goal) << (is_positive(s.status) ? " became " : " did not become ") << status_word(s.status)
       << ":\n";
    if (s.arguments.empty()) {
      os << (is_positive(s.status) ? "  - no objection was raised.\n" : "  - no argument supported it.\n");
      continue;
    }

    auto accepted = [&](const std::string& id) {
      return std::binary_search(s.accepted.begin(), s.accepted.end(), id);
    };
    std::vector<std::tuple<int, std::string, std::string>> order;
    for (const std::string& id : s.arguments) {
      const Argument& a = e.arguments.at(id);
      order.emplace_back(group(a, accepted(id)), canonical_text(a), id);
    }
    std::sort(order.begin(), order.end());

    for (const auto& [g, key, id] : order) {
      const Argument& a = e.arguments.at(id);
      os << "  - " << clause(a, templates) << " [" << e.aliases.at(id) << "]";
      if (e.mode == Mode::complete) {
        std::vector<std::string> attackers;
        std::vector<std::string> refuters;
        for (const Attack& at : s.attacks) {
          if (at.target != id) continue;
          attackers.push_back(at.attacker);
          if (accepted(at.attacker)) refuters.push_back(at.attacker);
        }
        if (!attackers.empty()) {
          if (!accepted(id))
            os << "; however, this is refuted by " << tags(refuters.empty() ? attackers : refuters, e.aliases);
          else
            os << "; it was challenged by " << tags(attackers, e.aliases) << " but stands";
        }
      }
      os << ".\n";
    }
  }
  return os.str();
}

std::string explanation_document(const Explanation& e, const Templates& templates) {
  using detail::Json;
  Json sections = Json::array();
  for (const ExplanationSection& s : e.sections) {
    Json attacks = Json::array();
    for (const Attack& at : s.attacks) attacks.push_back(detail::attack_json(at));
    sections.push_back({{"stage", std::string(tag(s.stage))},
                        {"record", s.record},
                        {"status", std::string(to_string(s.status))},
                        {"arguments", s.arguments},
                        {"accepted", s.accepted},
                        {"attacks", attacks}});
  }
  Json arguments = Json::object();
  for (const auto& [id, a] : e.arguments) arguments[id] = detail::argument_json(a, e.aliases);

  Json doc{{"goal", to_string(e.goal)},
           {"mode", std::string(to_string(e.mode))},
           {"polarity", e.polarity == Polarity::why ? "why" : "why_not"},
           {"sections", sections},
           {"arguments", arguments},
           {"prose", render(e, templates)}};
  return doc.dump(2) + "\n";
}

}  // namespace bbgp
