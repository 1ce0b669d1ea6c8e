// JSON encodings shared by the run report and explanation documents.
#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "bbgp/argument.hpp"
#include "bbgp/semantics.hpp"

namespace bbgp::detail {

using Json = nlohmann::json;
using Aliases = std::map<std::string, std::string>;

inline Json support_json(const DerivationSchema& schema) {
  Json steps = Json::array();
  for (const Step& s : schema.steps())
    steps.push_back({{"literal", to_string(s.literal)}, {"rule", s.rule ? Json(s.rule->origin) : Json(nullptr)}});
  return steps;
}

inline Json argument_json(const Argument& a, const Aliases& aliases) {
  Json j{{"category", std::string(to_string(a.category))},
         {"claim", to_string(a.claim)},
         {"support", support_json(a.support)}};
  if (auto it = aliases.find(a.id); it != aliases.end()) j["alias"] = it->second;
  if (a.goal) j["goal"] = to_string(*a.goal);
  return j;
}

inline Json attack_json(const Attack& at) {
  return {{"attacker", at.attacker},
          {"target", at.target},
          {"flavor", std::string(to_string(at.flavor))},
          {"relation", std::string(to_string(at.relation))}};
}

inline Json ids_json(const ArgumentationFramework& af) {
  Json ids = Json::array();
  for (const Argument& a : af.args) ids.push_back(a.id);
  return ids;
}

inline Json af_json(const ArgumentationFramework& af) {
  Json attacks = Json::array();
  for (const Attack& at : af.attacks) attacks.push_back(attack_json(at));
  return {{"arguments", ids_json(af)}, {"attacks", attacks}};
}

}  // namespace bbgp::detail
