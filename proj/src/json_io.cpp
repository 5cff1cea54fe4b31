#include "nilary/json_io.hpp"

namespace nilary {

using nlohmann::json;

json elements_json(const ElementSet& s) { return json(s.elements()); }

json ideal_json(const ElementSet& s, IdealKind kind) {
  return json{{"kind", std::string(to_string(kind))}, {"elements", elements_json(s)}};
}

namespace {

json ref_json(const IdealRef& ref) {
  json j = ideal_json(ref.elements, ref.kind);
  if (ref.generator) j["generator"] = *ref.generator;
  return j;
}

template <typename T>
void put_optional(json& j, const char* key, const std::optional<T>& v) {
  if (v) j[key] = *v;
}

}  // namespace

json witness_json(const Witness& w) {
  if (const auto* e = std::get_if<ElementWitness>(&w)) {
    json j{{"type", "element"}, {"a", e->a}};
    put_optional(j, "exponent", e->exponent);
    return j;
  }
  if (const auto* e = std::get_if<ElementPairWitness>(&w)) return json{{"type", "element-pair"}, {"a", e->a}, {"b", e->b}};
  if (const auto* e = std::get_if<IdealWitness>(&w)) return json{{"type", "ideal"}, {"J", ref_json(e->ideal)}};
  if (const auto* e = std::get_if<IdealPairWitness>(&w))
    return json{{"type", "ideal-pair"}, {"J", ref_json(e->first)}, {"K", ref_json(e->second)}};
  return json{{"type", "none"}};
}

json verdict_json(const Verdict& v) {
  return json{{"holds", v.holds}, {"witness", witness_json(v.witness)}, {"na", v.not_applicable}};
}

json report_json(const PropertyReport& r) {
  json verdicts = json::object();
  for (Predicate p : kAllPredicates) verdicts[std::string(predicate_name(p))] = verdict_json(r[p]);
  json j{{"ring", r.ring_label}, {"ideal", elements_json(r.ideal)}, {"proper", r.proper}, {"verdicts", verdicts}};
  if (r.characteristic) {
    json factors = json::array();
    for (const auto& [p, e] : r.characteristic->factors) factors.push_back({p, e});
    j["char"] = json{{"value", r.characteristic->value}, {"factors", factors}};
  }
  if (r.facts) {
    j["ring_facts"] = json{{"order", r.facts->order},
                           {"commutative", r.facts->commutative},
                           {"unital", r.facts->unital},
                           {"nil", r.facts->nil}};
  }
  return j;
}

json lattice_json(const IdealLattice& l) {
  json ideals = json::array();
  for (const auto& i : l) ideals.push_back(ideal_json(i.elements(), i.kind()));
  return json{{"ring", l.ring().label()}, {"kind", std::string(to_string(l.kind()))}, {"count", l.size()},
              {"ideals", ideals}};
}

json theorem_json(const TheoremResult& r, bool timing) {
  json violations = json::array();
  for (const auto& v : r.violations) {
    json witnesses = json::array();
    for (const auto& w : v.witnesses) {
      witnesses.push_back(json{{"ring", w.ring->label()},
                               {"ideal", elements_json(w.ideal)},
                               {"predicate", std::string(predicate_name(w.predicate))},
                               {"verdict", verdict_json(w.verdict)}});
    }
    violations.push_back(json{{"instance", v.instance}, {"witnesses", witnesses}});
  }
  json j{{"id", r.id},
         {"pass", r.pass()},
         {"instances", r.instances},
         {"hypothesis_instances", r.hypothesis_instances},
         {"violations", violations}};
  if (r.vacuous()) j["warning"] = "no instance satisfied the hypothesis";
  if (timing) j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

json harness_json(const HarnessReport& r, bool timing) {
  json cases = json::array();
  for (const auto& c : r.cases) cases.push_back(theorem_json(c, timing));
  json j{{"cases", cases}, {"corpus", json{{"rings", r.corpus}}}, {"pass", r.pass()}};
  if (r.empty_corpus) j["warning"] = "empty corpus";
  return j;
}

json hunt_json(const std::vector<HuntMatch>& matches, const HuntQuery& query) {
  json items = json::array();
  for (const auto& m : matches) items.push_back(json{{"ring", m.ring_label}, {"ideal", elements_json(m.ideal)}});
  return json{{"query", query.text()}, {"count", matches.size()}, {"matches", items}};
}

}  // namespace nilary
