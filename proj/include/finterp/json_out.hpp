#pragma once

#include <json.hpp>

#include "finterp/classify.hpp"
#include "finterp/dialectica.hpp"
#include "finterp/mr.hpp"
#include "finterp/print.hpp"
#include "finterp/sequential.hpp"
#include "finterp/syntax.hpp"
#include "finterp/witness.hpp"

namespace finterp {

using Json = nlohmann::json;

inline Json to_json(const VarTuple& tuple) {
  Json arr = Json::array();
  for (const auto& [n, t] : tuple.vars) arr.push_back({{"name", n}, {"type", to_string(t)}});
  return arr;
}

inline Json types_to_json(const std::vector<Type>& types) {
  Json arr = Json::array();
  for (const Type& t : types) arr.push_back(to_string(t));
  return arr;
}

inline Json to_json(const ClassificationReport& r) {
  Json paths = Json::object();
  for (const auto& [flag, path] : r.witness_paths) paths[flag] = path;
  return Json{{"quantifier_free", r.quantifier_free},
              {"exists_free", r.exists_free},
              {"purely_universal", r.purely_universal},
              {"in_gamma1", r.in_gamma1},
              {"in_gamma2", r.in_gamma2},
              {"negative", r.negative},
              {"witness_paths", paths}};
}

inline Json to_json(const MrResult& r) {
  return Json{{"realizers", to_json(r.realizers)}, {"formula", to_string(r.formula)}};
}

inline Json to_json(const DResult& r) {
  return Json{{"exists_tuple", to_json(r.exists_tuple)},
              {"forall_tuple", to_json(r.forall_tuple)},
              {"matrix", to_string(r.matrix)}};
}

inline Json to_json(const DTypes& t) {
  return Json{{"exists_types", types_to_json(t.exists_types)},
              {"forall_types", types_to_json(t.forall_types)}};
}

inline Json to_json(const TheoremReport& r) {
  Json applicable = Json::array();
  for (auto t : r.applicable) applicable.push_back(theorem_label(t));
  return Json{{"gamma1", r.gamma1},
              {"gamma2", r.gamma2},
              {"second_order_fragment", r.second_order_fragment},
              {"uses_full_recursors", r.uses_full_recursors},
              {"applicable", applicable},
              {"rca_replacement", r.rca_replacement}};
}

inline Json to_json(const WitnessReport& r) {
  Json failures = Json::array();
  for (const auto& f : r.failures) {
    Json inputs = Json::array();
    for (long v : f.inputs) inputs.push_back(v);
    failures.push_back(
        {{"inputs", inputs}, {"formula", to_string(f.instance)}, {"decision", f.decision}});
  }
  return Json{{"checked", r.checked},
              {"verdict", r.verdict()},
              {"range", r.range},
              {"failures", failures}};
}

}  // namespace finterp
