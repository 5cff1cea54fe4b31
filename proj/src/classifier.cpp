#include "nilary/classifier.hpp"

#include <stdexcept>

namespace nilary {

namespace {

struct PredicateInfo {
  Predicate predicate;
  std::string_view name;
  std::string_view abbrev;
};

constexpr std::array<PredicateInfo, kPredicateCount> kRegistry = {{
    {Predicate::completely_prime, "completely_prime", "cP"},
    {Predicate::completely_semiprime, "completely_semiprime", "cSP"},
    {Predicate::completely_nilary, "completely_nilary", "cN"},
    {Predicate::prime, "prime", "P"},
    {Predicate::semiprime, "semiprime", "SP"},
    {Predicate::nilary, "nilary", "N"},
    {Predicate::p_nilary, "p_nilary", "pN"},
    {Predicate::right_primary, "right_primary", "rPm"},
    {Predicate::left_primary, "left_primary", "lPm"},
    {Predicate::p_right_primary, "p_right_primary", "prPm"},
    {Predicate::p_left_primary, "p_left_primary", "plPm"},
    {Predicate::completely_right_primary, "completely_right_primary", "crPm"},
    {Predicate::completely_left_primary, "completely_left_primary", "clPm"},
    {Predicate::weakly_nilary, "weakly_nilary", "wN"},
    {Predicate::weakly_p_nilary, "weakly_p_nilary", "wpN"},
    {Predicate::weakly_nilary_right, "weakly_nilary_right", "wNr"},
    {Predicate::weakly_nilary_left, "weakly_nilary_left", "wNl"},
}};

std::size_t kind_slot(IdealKind k) { return static_cast<std::size_t>(k); }

Verdict pass() { return Verdict{true, false, {}}; }
Verdict fail(Witness w = {}) { return Verdict{false, false, std::move(w)}; }
Verdict not_applicable() { return Verdict{false, true, {}}; }

// Per-(ring, ideal) facts reused by the quantifier loops below.
class IdealProbe {
 public:
  IdealProbe(const RingAnalysis& analysis, const Ideal& ideal) : a_(analysis), target_(ideal.elements()) {}

  const ElementSet& target() const { return target_; }

  // least n with x^n in the ideal
  std::optional<unsigned> element_power(Element x) {
    if (element_power_.empty()) {
      const auto n = a_.ring().order();
      element_power_.resize(n);
      for (Element e = 0; e < n; ++e) {
        const auto seq = a_.powers(e);
        for (std::size_t k = 0; k < seq.size(); ++k)
          if (target_.contains(seq[k])) {
            element_power_[e] = static_cast<unsigned>(k + 1);
            break;
          }
      }
    }
    return element_power_[x];
  }

  bool contains(IdealKind kind, std::size_t idx) {
    return a_.lattice(kind)[idx].elements().is_subset_of(target_);
  }

  std::optional<unsigned> power_in(IdealKind kind, std::size_t idx) {
    auto& cache = power_in_[kind_slot(kind)];
    if (cache.empty()) {
      const auto& lattice = a_.lattice(kind);
      cache.resize(lattice.size());
      for (std::size_t k = 0; k < lattice.size(); ++k) cache[k] = some_power_contained(a_.chain(kind, k), target_);
    }
    return cache[idx];
  }

  bool product_in(IdealKind kind, std::size_t j, std::size_t k) {
    return contains(kind, a_.product_index(kind, j, k));
  }

  bool product_zero(IdealKind kind, std::size_t j, std::size_t k) {
    return a_.lattice(kind)[a_.product_index(kind, j, k)].is_zero();
  }

 private:
  const RingAnalysis& a_;
  const ElementSet& target_;
  std::vector<std::optional<unsigned>> element_power_;
  std::array<std::vector<std::optional<unsigned>>, 3> power_in_;
};

std::vector<std::size_t> all_indices(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t k = 0; k < n; ++k) v[k] = k;
  return v;
}

// Shared shape of the ideal-pair predicates: for every pair (J, K) from the
// domain with the premise satisfied, the conclusion must hold.
template <typename Premise, typename Conclusion>
Verdict for_all_pairs(const RingAnalysis& a, IdealKind kind, std::span<const std::size_t> domain, Premise premise,
                      Conclusion conclusion) {
  for (std::size_t j : domain)
    for (std::size_t k : domain)
      if (premise(j, k) && !conclusion(j, k)) return fail(IdealPairWitness{a.ref(kind, j), a.ref(kind, k)});
  return pass();
}

template <typename Violates>
Verdict for_all_elements(const Ring& r, Violates violates) {
  const auto n = static_cast<Element>(r.order());
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (violates(x, y)) return fail(ElementPairWitness{x, y});
  return pass();
}

Verdict weakly_nilary_over(const RingAnalysis& a, IdealProbe& probe, IdealKind kind, bool principal) {
  const auto domain = principal ? std::vector<std::size_t>(a.principal_indices(kind).begin(),
                                                           a.principal_indices(kind).end())
                                : all_indices(a.lattice(kind).size());
  return for_all_pairs(
      a, kind, domain,
      [&](std::size_t j, std::size_t k) { return !probe.product_zero(kind, j, k) && probe.product_in(kind, j, k); },
      [&](std::size_t j, std::size_t k) {
        return probe.power_in(kind, j).has_value() || probe.power_in(kind, k).has_value();
      });
}

}  // namespace

std::string_view predicate_name(Predicate p) { return kRegistry[static_cast<std::size_t>(p)].name; }
std::string_view predicate_abbrev(Predicate p) { return kRegistry[static_cast<std::size_t>(p)].abbrev; }

std::optional<Predicate> parse_predicate(std::string_view name) {
  for (const auto& info : kRegistry)
    if (info.name == name) return info.predicate;
  return std::nullopt;
}

RingFacts ring_facts(const Ring& r) {
  RingFacts f;
  f.order = r.order();
  f.commutative = r.is_commutative();
  f.unital = r.has_nonzero_unity();
  f.nil = is_nil(whole_ring(r)).nil;
  if (r.one()) f.characteristic = characteristic(r);
  return f;
}

struct RingAnalysis::KindData {
  std::once_flag lattice_once;
  std::optional<IdealLattice> lattice;
  std::vector<std::size_t> principal;
  std::vector<std::optional<Element>> generator;
  std::once_flag chains_once;
  std::vector<PowerChain> chains;
  std::once_flag products_once;
  std::vector<std::size_t> products;
};

RingAnalysis::~RingAnalysis() = default;

RingAnalysis::RingAnalysis(const Ring& ring, Caps caps) : ring_(&ring), caps_(caps) {
  for (auto& k : kinds_) k = std::make_unique<KindData>();
}

RingAnalysis::KindData& RingAnalysis::data(IdealKind kind) const {
  KindData& d = *kinds_[kind_slot(kind)];
  std::call_once(d.lattice_once, [&] {
    d.lattice.emplace(enumerate_ideals(*ring_, kind, caps_));
    d.generator.assign(d.lattice->size(), std::nullopt);
    for (Element e = 0; e < ring_->order(); ++e) {
      const auto idx = d.lattice->index_of(principal_ideal(*ring_, e, kind).elements());
      if (!d.generator[*idx]) d.generator[*idx] = e;
    }
    for (std::size_t k = 0; k < d.lattice->size(); ++k)
      if (d.generator[k]) d.principal.push_back(k);
  });
  return d;
}

const IdealLattice& RingAnalysis::lattice(IdealKind kind) const { return *data(kind).lattice; }

std::span<const std::size_t> RingAnalysis::principal_indices(IdealKind kind) const { return data(kind).principal; }

std::optional<Element> RingAnalysis::generator_of(IdealKind kind, std::size_t index) const {
  return data(kind).generator.at(index);
}

const PowerChain& RingAnalysis::chain(IdealKind kind, std::size_t index) const {
  KindData& d = data(kind);
  std::call_once(d.chains_once, [&] {
    d.chains.reserve(d.lattice->size());
    for (const auto& i : *d.lattice) d.chains.push_back(power_chain(i));
  });
  return d.chains.at(index);
}

std::size_t RingAnalysis::product_index(IdealKind kind, std::size_t j, std::size_t k) const {
  KindData& d = data(kind);
  const std::size_t n = d.lattice->size();
  std::call_once(d.products_once, [&] {
    d.products.resize(n * n);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        const auto idx = d.lattice->index_of(ideal_product((*d.lattice)[x], (*d.lattice)[y]).elements());
        if (!idx) throw std::logic_error("ideal product fell outside the lattice");
        d.products[x * n + y] = *idx;
      }
  });
  return d.products.at(j * n + k);
}

std::span<const Element> RingAnalysis::powers(Element a) const {
  std::call_once(powers_once_, [&] {
    powers_.resize(ring_->order());
    for (Element e = 0; e < ring_->order(); ++e) powers_[e] = power_sequence(*ring_, e);
  });
  return powers_.at(a);
}

const Ideal& RingAnalysis::ideal(const ElementSet& elements) const {
  const auto& l = lattice(IdealKind::two_sided);
  const auto idx = l.index_of(elements);
  if (!idx) throw std::invalid_argument("not a two-sided ideal of " + ring_->label());
  return l[*idx];
}

IdealRef RingAnalysis::ref(IdealKind kind, std::size_t index) const {
  return IdealRef{lattice(kind)[index].elements(), kind, generator_of(kind, index)};
}

Verdict evaluate(const RingAnalysis& a, const Ideal& ideal, Predicate p) {
  if (&ideal.ring() != &a.ring()) throw std::invalid_argument("evaluate: ideal belongs to a different ring");
  if (ideal.kind() != IdealKind::two_sided) throw std::invalid_argument("evaluate: predicates need a two-sided ideal");
  const Ring& r = a.ring();
  IdealProbe probe(a, ideal);
  const auto& in = probe.target();
  constexpr auto two = IdealKind::two_sided;
  const auto every = all_indices(a.lattice(two).size());
  const auto principal = a.principal_indices(two);

  switch (p) {
    case Predicate::completely_prime:
      if (!ideal.is_proper()) return fail();
      return for_all_elements(r, [&](Element x, Element y) {
        return in.contains(r.mul(x, y)) && !in.contains(x) && !in.contains(y);
      });
    case Predicate::completely_semiprime:
      for (Element x = 0; x < r.order(); ++x)
        if (!in.contains(x))
          if (auto n = probe.element_power(x)) return fail(ElementWitness{x, n});
      return pass();
    case Predicate::completely_nilary:
      return for_all_elements(r, [&](Element x, Element y) {
        return in.contains(r.mul(x, y)) && !probe.element_power(x) && !probe.element_power(y);
      });
    case Predicate::completely_right_primary:
      return for_all_elements(r, [&](Element x, Element y) {
        return in.contains(r.mul(x, y)) && !in.contains(x) && !probe.element_power(y);
      });
    case Predicate::completely_left_primary:
      return for_all_elements(r, [&](Element x, Element y) {
        return in.contains(r.mul(x, y)) && !probe.element_power(x) && !in.contains(y);
      });
    case Predicate::prime:
      if (!ideal.is_proper()) return fail();
      return for_all_pairs(
          a, two, every, [&](std::size_t j, std::size_t k) { return probe.product_in(two, j, k); },
          [&](std::size_t j, std::size_t k) { return probe.contains(two, j) || probe.contains(two, k); });
    case Predicate::semiprime:
      for (std::size_t j : every)
        if (probe.product_in(two, j, j) && !probe.contains(two, j)) return fail(IdealWitness{a.ref(two, j)});
      return pass();
    case Predicate::nilary:
    case Predicate::p_nilary:
      return for_all_pairs(
          a, two, p == Predicate::nilary ? std::span<const std::size_t>(every) : principal,
          [&](std::size_t j, std::size_t k) { return probe.product_in(two, j, k); },
          [&](std::size_t j, std::size_t k) {
            return probe.power_in(two, j).has_value() || probe.power_in(two, k).has_value();
          });
    case Predicate::right_primary:
    case Predicate::p_right_primary:
      return for_all_pairs(
          a, two, p == Predicate::right_primary ? std::span<const std::size_t>(every) : principal,
          [&](std::size_t j, std::size_t k) { return probe.product_in(two, j, k); },
          [&](std::size_t j, std::size_t k) { return probe.contains(two, j) || probe.power_in(two, k).has_value(); });
    case Predicate::left_primary:
    case Predicate::p_left_primary:
      return for_all_pairs(
          a, two, p == Predicate::left_primary ? std::span<const std::size_t>(every) : principal,
          [&](std::size_t j, std::size_t k) { return probe.product_in(two, j, k); },
          [&](std::size_t j, std::size_t k) { return probe.power_in(two, j).has_value() || probe.contains(two, k); });
    case Predicate::weakly_nilary:
    case Predicate::weakly_p_nilary:
      if (!ideal.is_proper()) return not_applicable();
      return weakly_nilary_over(a, probe, two, p == Predicate::weakly_p_nilary);
    case Predicate::weakly_nilary_right:
    case Predicate::weakly_nilary_left:
      if (!ideal.is_proper() || !r.one()) return not_applicable();
      return weakly_nilary_over(a, probe, p == Predicate::weakly_nilary_right ? IdealKind::right : IdealKind::left,
                                false);
  }
  throw std::logic_error("unknown predicate");
}

Verdict is_weakly_nilary_onesided(const RingAnalysis& a, const Ideal& ideal, IdealKind side, bool principal) {
  if (!a.ring().one()) throw std::invalid_argument("unity required");
  if (side == IdealKind::two_sided) throw std::invalid_argument("side must be left or right");
  if (&ideal.ring() != &a.ring() || ideal.kind() != IdealKind::two_sided)
    throw std::invalid_argument("expected a two-sided ideal of the analysed ring");
  if (!ideal.is_proper()) return not_applicable();
  IdealProbe probe(a, ideal);
  return weakly_nilary_over(a, probe, side, principal);
}

PropertyReport classify_ideal(const RingAnalysis& a, const Ideal& ideal, const Evaluator& eval) {
  PropertyReport report;
  report.ring_label = a.ring().label();
  report.ideal = ideal.elements();
  report.proper = ideal.is_proper();
  for (Predicate p : kAllPredicates) report.verdicts[static_cast<std::size_t>(p)] = eval(a, ideal, p);
  if (a.ring().one()) report.characteristic = characteristic(a.ring());
  return report;
}

PropertyReport classify_ring(const RingAnalysis& a, const Evaluator& eval) {
  PropertyReport report = classify_ideal(a, a.lattice().ideals().front(), eval);
  report.facts = ring_facts(a.ring());
  return report;
}

PropertyReport classify_ring(const Ring& r) {
  RingAnalysis a(r);
  return classify_ring(a);
}

std::vector<PropertyReport> full_report(const RingAnalysis& a, const Evaluator& eval) {
  std::vector<PropertyReport> out;
  for (const auto& ideal : a.lattice()) out.push_back(classify_ideal(a, ideal, eval));
  return out;
}

std::vector<PropertyReport> full_report(const Ring& r) {
  RingAnalysis a(r);
  return full_report(a);
}

}  // namespace nilary
