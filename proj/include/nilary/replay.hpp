#pragma once

#include <string>

#include "nilary/classifier.hpp"
#include "nilary/ring.hpp"

namespace nilary {

struct ReplayOutcome {
  bool confirmed = false;
  std::string reason;
};

// Re-checks a verdict's witness against the defining formula of the
// predicate, computing products, powers and closures straight from the
// ring tables. Verdicts that hold carry no witness and are not replayed
// (confirmed trivially); not-applicable verdicts are checked against their
// precondition.
ReplayOutcome replay_witness(const Ring& r, const ElementSet& ideal, Predicate p, const Verdict& v);

}  // namespace nilary
