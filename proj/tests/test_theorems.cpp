#include <doctest.h>

#include "nilary/corpus.hpp"
#include "nilary/json_io.hpp"
#include "nilary/replay.hpp"
#include "nilary/theorems.hpp"

using namespace nilary;

namespace {

// Forgets exponents: completely nilary collapses to "ab in I => a or b in I".
Verdict forgetful(const RingAnalysis& a, const Ideal& i, Predicate p) {
  if (p != Predicate::completely_nilary) return evaluate(a, i, p);
  const Ring& r = a.ring();
  for (Element x = 0; x < r.order(); ++x)
    for (Element y = 0; y < r.order(); ++y)
      if (i.contains(r.mul(x, y)) && !i.contains(x) && !i.contains(y))
        return Verdict{false, false, ElementPairWitness{x, y}};
  return Verdict{true, false, {}};
}

const Corpus& builtin() {
  static const Corpus c = build_builtin_corpus();
  return c;
}

}  // namespace

TEST_CASE("registry") {
  const auto& cases = theorem_cases();
  CHECK(cases.size() >= 20);
  for (const char* id : {"P1.2", "P1.3", "Pquot", "Phom-fwd", "Phom-back", "Cquot-corr", "Pnil-lift",
                         "Pcomm-pnilary", "Pnil-nilpotent", "Cchar", "D2.1-hierarchy", "E2.2", "P2.3w", "P2.4w",
                         "C2.5w", "P2.6", "EM2Z2", "Rprime-nilary"})
    CHECK_MESSAGE(is_theorem_case(id), id);
  CHECK_FALSE(is_theorem_case("P9.9"));
  CHECK_THROWS_AS(run_case("P9.9", builtin()), std::invalid_argument);
}

TEST_CASE("builtin corpus passes every case with witnesses that replay") {
  std::size_t observed = 0, unconfirmed = 0;
  HarnessOptions opts;
  opts.observer = [&](const Ring& r, const ElementSet& i, Predicate p, const Verdict& v) {
    ++observed;
    if (!replay_witness(r, i, p, v).confirmed) ++unconfirmed;
  };
  const auto report = run_all(builtin(), opts);
  CHECK(report.pass());
  CHECK_FALSE(report.empty_corpus);
  CHECK(report.corpus.size() >= 50);
  for (const auto& c : report.cases) {
    CAPTURE(c.id);
    CHECK(c.violations.empty());
    CHECK(c.instances > 0);
    CHECK(c.hypothesis_instances > 0);
  }
  CHECK(observed > 0);
  CHECK(unconfirmed == 0);
}

TEST_CASE("a corrupted classifier is caught") {
  HarnessOptions opts;
  opts.evaluator = forgetful;
  const auto lift = run_case("Pnil-lift", build_corpus({"Zn:4"}), opts);
  REQUIRE_FALSE(lift.pass());
  bool refused = false;
  for (const auto& v : lift.violations) {
    CHECK_FALSE(v.witnesses.empty());
    for (const auto& w : v.witnesses) {
      CHECK(w.ring);
      if (w.predicate == Predicate::completely_nilary && !w.verdict.holds)
        refused |= !replay_witness(*w.ring, w.ideal, w.predicate, w.verdict).confirmed;
    }
  }
  // the bogus verdict's witness does not survive an independent check
  CHECK(refused);

  const auto all = run_all(builtin(), opts);
  CHECK_FALSE(all.pass());
}

TEST_CASE("empty corpus") {
  const Corpus empty;
  const auto report = run_all(empty);
  CHECK(report.empty_corpus);
  CHECK(report.pass());
  for (const auto& c : report.cases) {
    if (c.example) continue;
    CHECK(c.instances == 0);
    CHECK(c.vacuous());
  }
  const auto j = harness_json(report, false);
  CHECK(j.contains("warning"));
  CHECK(j["pass"] == true);
}

TEST_CASE("case selection and determinism") {
  HarnessOptions opts;
  opts.cases = {"E2.2", "EM2Z2"};
  const auto r = run_all(builtin(), opts);
  REQUIRE(r.cases.size() == 2);
  CHECK(r.cases[0].id == "E2.2");
  CHECK(r.cases[1].id == "EM2Z2");
  CHECK(r.pass());

  const auto a = harness_json(run_all(builtin()), false).dump();
  const auto b = harness_json(run_all(builtin()), false).dump();
  CHECK(a == b);
}

TEST_CASE("small corpora") {
  const auto c = build_corpus({"Zn:6", "Zn:4", "M:2:Zn:2"});
  const auto r = run_all(c);
  CHECK(r.pass());
  const auto e = run_case("E2.2", c);
  CHECK(e.example);
  CHECK(e.pass());
}
