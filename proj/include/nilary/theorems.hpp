#pragma once

#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "nilary/classifier.hpp"
#include "nilary/corpus.hpp"

namespace nilary {

// One predicate verdict that took part in a violating instance.
struct WitnessRecord {
  std::shared_ptr<const Ring> ring;
  ElementSet ideal;
  Predicate predicate = Predicate::completely_nilary;
  Verdict verdict;
};

struct Violation {
  std::string instance;
  std::vector<WitnessRecord> witnesses;
};

struct TheoremResult {
  std::string id;
  std::string description;
  bool example = false;  // fixed reproduction rather than a corpus sweep
  std::size_t instances = 0;
  std::size_t hypothesis_instances = 0;
  std::vector<Violation> violations;
  double elapsed_ms = 0.0;

  bool pass() const noexcept { return violations.empty(); }
  // A corpus sweep that never met its hypothesis.
  bool vacuous() const noexcept { return !example && hypothesis_instances == 0; }
};

// Called once for every fresh verdict the harness computes.
using VerdictObserver = std::function<void(const Ring&, const ElementSet&, Predicate, const Verdict&)>;

struct HarnessOptions {
  Evaluator evaluator = evaluate;
  VerdictObserver observer;
  std::vector<std::string> cases;  // empty = all
};

struct HarnessReport {
  std::vector<TheoremResult> cases;
  std::vector<std::string> corpus;
  bool empty_corpus = false;

  bool pass() const noexcept;
};

struct TheoremCase {
  std::string_view id;
  std::string_view description;
  bool example;
};

// Registry order is report order.
const std::vector<TheoremCase>& theorem_cases();
bool is_theorem_case(std::string_view id);

// Runs one registered case. Throws std::invalid_argument for unknown ids.
TheoremResult run_case(std::string_view id, const Corpus& corpus, const HarnessOptions& options = {});
HarnessReport run_all(const Corpus& corpus, const HarnessOptions& options = {});

}  // namespace nilary
