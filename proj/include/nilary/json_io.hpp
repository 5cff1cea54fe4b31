#pragma once

#include <json.hpp>

#include "nilary/classifier.hpp"
#include "nilary/hunt.hpp"
#include "nilary/ideal.hpp"
#include "nilary/theorems.hpp"

namespace nilary {

nlohmann::json elements_json(const ElementSet& s);
// {"kind":"two-sided","elements":[0,2,4]}
nlohmann::json ideal_json(const ElementSet& s, IdealKind kind);
nlohmann::json witness_json(const Witness& w);
nlohmann::json verdict_json(const Verdict& v);
nlohmann::json report_json(const PropertyReport& r);
nlohmann::json lattice_json(const IdealLattice& l);
nlohmann::json theorem_json(const TheoremResult& r, bool timing = true);
// {"cases":[...],"corpus":{"rings":[...]}}
nlohmann::json harness_json(const HarnessReport& r, bool timing = true);
nlohmann::json hunt_json(const std::vector<HuntMatch>& matches, const HuntQuery& query);

}  // namespace nilary
