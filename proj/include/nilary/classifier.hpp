#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "nilary/ideal.hpp"
#include "nilary/ring.hpp"

namespace nilary {

// Registry order is the report order.
enum class Predicate : std::uint8_t {
  completely_prime,
  completely_semiprime,
  completely_nilary,
  prime,
  semiprime,
  nilary,
  p_nilary,
  right_primary,
  left_primary,
  p_right_primary,
  p_left_primary,
  completely_right_primary,
  completely_left_primary,
  weakly_nilary,
  weakly_p_nilary,
  weakly_nilary_right,
  weakly_nilary_left,
};

inline constexpr std::size_t kPredicateCount = 17;

inline constexpr std::array<Predicate, kPredicateCount> kAllPredicates = {
    Predicate::completely_prime,         Predicate::completely_semiprime, Predicate::completely_nilary,
    Predicate::prime,                    Predicate::semiprime,            Predicate::nilary,
    Predicate::p_nilary,                 Predicate::right_primary,        Predicate::left_primary,
    Predicate::p_right_primary,          Predicate::p_left_primary,       Predicate::completely_right_primary,
    Predicate::completely_left_primary,  Predicate::weakly_nilary,        Predicate::weakly_p_nilary,
    Predicate::weakly_nilary_right,      Predicate::weakly_nilary_left,
};

std::string_view predicate_name(Predicate p);
// Short column header used by the text tables.
std::string_view predicate_abbrev(Predicate p);
std::optional<Predicate> parse_predicate(std::string_view name);

// An ideal as it appears inside a witness. Principal ideals carry the
// generator they were built from.
struct IdealRef {
  ElementSet elements;
  IdealKind kind = IdealKind::two_sided;
  std::optional<Element> generator;
};

struct ElementWitness {
  Element a = 0;
  std::optional<unsigned> exponent;  // least n with a^n in the ideal
};

struct ElementPairWitness {
  Element a = 0;
  Element b = 0;
};

struct IdealWitness {
  IdealRef ideal;
};

struct IdealPairWitness {
  IdealRef first;
  IdealRef second;
};

// Counter-witness for a failed universal predicate; empty when the
// predicate holds or fails only for properness.
using Witness = std::variant<std::monostate, ElementWitness, ElementPairWitness, IdealWitness, IdealPairWitness>;

struct Verdict {
  bool holds = false;
  bool not_applicable = false;
  Witness witness;
};

struct RingFacts {
  std::size_t order = 0;
  bool commutative = false;
  bool unital = false;  // unity distinct from zero
  bool nil = false;
  std::optional<Characteristic> characteristic;
};

RingFacts ring_facts(const Ring& r);

// Lazily computed per-ring data shared by all predicates: ideal lattices,
// principal ideals, product tables, power chains and element powers.
// Thread-safe; the ring must outlive the analysis.
class RingAnalysis {
 public:
  explicit RingAnalysis(const Ring& ring, Caps caps = {});
  ~RingAnalysis();
  RingAnalysis(const RingAnalysis&) = delete;
  RingAnalysis& operator=(const RingAnalysis&) = delete;

  const Ring& ring() const noexcept { return *ring_; }
  const Caps& caps() const noexcept { return caps_; }

  const IdealLattice& lattice(IdealKind kind = IdealKind::two_sided) const;
  // Lattice indices of the distinct principal ideals, ascending.
  std::span<const std::size_t> principal_indices(IdealKind kind = IdealKind::two_sided) const;
  // Least generator of a principal lattice member, if it is principal.
  std::optional<Element> generator_of(IdealKind kind, std::size_t index) const;
  const PowerChain& chain(IdealKind kind, std::size_t index) const;
  std::size_t product_index(IdealKind kind, std::size_t j, std::size_t k) const;
  // a, a^2, ... up to the first repeat
  std::span<const Element> powers(Element a) const;

  // The two-sided lattice member with these elements. Throws
  // std::invalid_argument if it is not a two-sided ideal.
  const Ideal& ideal(const ElementSet& elements) const;
  IdealRef ref(IdealKind kind, std::size_t index) const;

 private:
  struct KindData;
  KindData& data(IdealKind kind) const;

  const Ring* ring_;
  Caps caps_;
  std::array<std::unique_ptr<KindData>, 3> kinds_;
  mutable std::once_flag powers_once_;
  mutable std::vector<std::vector<Element>> powers_;
};

// Decides one predicate for a two-sided ideal of the analysed ring.
Verdict evaluate(const RingAnalysis& analysis, const Ideal& ideal, Predicate p);

// Weakly (p-)nilary quantified over one-sided ideals of the given side.
// Throws std::invalid_argument unless the ring has unity.
Verdict is_weakly_nilary_onesided(const RingAnalysis& analysis, const Ideal& ideal, IdealKind side,
                                  bool principal);

struct PropertyReport {
  std::string ring_label;
  ElementSet ideal;
  bool proper = true;
  std::array<Verdict, kPredicateCount> verdicts;
  std::optional<Characteristic> characteristic;
  std::optional<RingFacts> facts;  // present for ring-level reports

  const Verdict& operator[](Predicate p) const { return verdicts[static_cast<std::size_t>(p)]; }
  bool holds(Predicate p) const { return (*this)[p].holds; }
};

using Evaluator = std::function<Verdict(const RingAnalysis&, const Ideal&, Predicate)>;

PropertyReport classify_ideal(const RingAnalysis& analysis, const Ideal& ideal, const Evaluator& eval = evaluate);
// Profile of the zero ideal plus ring-level facts.
PropertyReport classify_ring(const RingAnalysis& analysis, const Evaluator& eval = evaluate);
PropertyReport classify_ring(const Ring& r);
// One report per two-sided ideal, in lattice order.
std::vector<PropertyReport> full_report(const RingAnalysis& analysis, const Evaluator& eval = evaluate);
std::vector<PropertyReport> full_report(const Ring& r);

}  // namespace nilary
