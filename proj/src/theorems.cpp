#include "nilary/theorems.hpp"

#include <chrono>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace nilary {

namespace {

constexpr auto kTwo = IdealKind::two_sided;

// Per-ring analysis plus memoised verdicts, shared across cases.
class Session {
 public:
  struct Ctx {
    std::shared_ptr<const Ring> ring;
    std::unique_ptr<RingAnalysis> analysis;
    std::unordered_map<ElementSet, std::array<std::optional<Verdict>, kPredicateCount>, ElementSetHash> memo;
    std::unordered_map<ElementSet, std::pair<Ctx*, Hom>, ElementSetHash> quotients;
    std::optional<RingFacts> facts;

    const IdealLattice& lattice() const { return analysis->lattice(kTwo); }
    const ElementSet& zero() const { return lattice()[0].elements(); }
  };

  explicit Session(const HarnessOptions& options) : options_(options) {}

  Ctx& ctx(const std::shared_ptr<const Ring>& ring) {
    auto it = by_ring_.find(ring.get());
    if (it != by_ring_.end()) return *it->second;
    auto c = std::make_unique<Ctx>();
    c->ring = ring;
    c->analysis = std::make_unique<RingAnalysis>(*ring);
    Ctx* raw = c.get();
    owned_.push_back(std::move(c));
    by_ring_.emplace(ring.get(), raw);
    return *raw;
  }

  const Verdict& verdict(Ctx& c, const ElementSet& ideal, Predicate p) {
    auto& slot = c.memo[ideal][static_cast<std::size_t>(p)];
    if (!slot) {
      slot = options_.evaluator(*c.analysis, c.analysis->ideal(ideal), p);
      if (options_.observer) options_.observer(*c.ring, ideal, p, *slot);
    }
    return *slot;
  }

  bool holds(Ctx& c, const ElementSet& ideal, Predicate p) { return verdict(c, ideal, p).holds; }

  WitnessRecord record(Ctx& c, const ElementSet& ideal, Predicate p) {
    return WitnessRecord{c.ring, ideal, p, verdict(c, ideal, p)};
  }

  std::pair<Ctx*, const Hom*> quotient(Ctx& c, const ElementSet& ideal) {
    auto it = c.quotients.find(ideal);
    if (it == c.quotients.end()) {
      auto q = make_quotient(*c.ring, ideal);
      auto ring = std::make_shared<const Ring>(std::move(q.ring));
      Ctx& qc = ctx(ring);
      it = c.quotients.emplace(ideal, std::make_pair(&qc, std::move(q.projection))).first;
    }
    return {it->second.first, &it->second.second};
  }

  const RingFacts& facts(Ctx& c) {
    if (!c.facts) c.facts = ring_facts(*c.ring);
    return *c.facts;
  }

 private:
  const HarnessOptions& options_;
  std::vector<std::unique_ptr<Ctx>> owned_;
  std::unordered_map<const Ring*, Ctx*> by_ring_;
};

using Ctx = Session::Ctx;

std::string describe(const Ctx& c, const ElementSet& ideal) {
  std::ostringstream os;
  os << c.ring->label() << " {";
  bool first = true;
  ideal.for_each([&](Element e) {
    os << (first ? "" : ",") << e;
    first = false;
  });
  os << "}";
  return os.str();
}

void violate(TheoremResult& res, std::string instance, std::vector<WitnessRecord> records) {
  res.violations.push_back(Violation{std::move(instance), std::move(records)});
}

using CaseFn = void (*)(Session&, const Corpus&, TheoremResult&);

template <typename F>
void for_each_ring(Session& s, const Corpus& corpus, F&& f) {
  for (const auto& entry : corpus.entries) f(s.ctx(entry.ring));
}

template <typename F>
void for_each_proper_ideal(Session& s, const Corpus& corpus, F&& f) {
  for_each_ring(s, corpus, [&](Ctx& c) {
    for (const auto& ideal : c.lattice())
      if (ideal.is_proper()) f(c, ideal.elements());
  });
}

void check_p1_2(Session& s, const Corpus& corpus, TheoremResult& res) {
  for_each_proper_ideal(s, corpus, [&](Ctx& c, const ElementSet& i) {
    ++res.instances;
    const bool cp = s.holds(c, i, Predicate::completely_prime);
    const bool both = s.holds(c, i, Predicate::completely_semiprime) && s.holds(c, i, Predicate::completely_nilary);
    if (cp || both) ++res.hypothesis_instances;
    if (cp != both)
      violate(res, describe(c, i),
              {s.record(c, i, Predicate::completely_prime), s.record(c, i, Predicate::completely_semiprime),
               s.record(c, i, Predicate::completely_nilary)});
  });
}

void check_p1_3(Session& s, const Corpus& corpus, TheoremResult& res) {
  for_each_ring(s, corpus, [&](Ctx& c) {
    const auto& lattice = c.lattice();
    std::vector<std::size_t> cn;
    for (std::size_t k = 0; k < lattice.size(); ++k)
      if (s.holds(c, lattice[k].elements(), Predicate::completely_nilary)) cn.push_back(k);

    std::vector<std::size_t> tuple;
    auto visit = [&]() {
      ++res.instances;
      ElementSet meet = lattice[tuple[0]].elements();
      std::size_t product = tuple[0];
      for (std::size_t t = 1; t < tuple.size(); ++t) {
        meet &= lattice[tuple[t]].elements();
        product = c.analysis->product_index(kTwo, product, tuple[t]);
      }
      bool hypothesis = false;
      for (std::size_t q : tuple)
        if (c.analysis->chain(kTwo, q).stable_value().elements().is_subset_of(meet)) hypothesis = true;
      if (!hypothesis) return;
      ++res.hypothesis_instances;
      const auto& prod = lattice[product].elements();
      if (!s.holds(c, prod, Predicate::completely_nilary)) {
        std::ostringstream os;
        os << c.ring->label() << " product of " << tuple.size() << " ideals";
        std::vector<WitnessRecord> recs;
        for (std::size_t q : tuple) recs.push_back(s.record(c, lattice[q].elements(), Predicate::completely_nilary));
        recs.push_back(s.record(c, prod, Predicate::completely_nilary));
        violate(res, os.str(), std::move(recs));
      }
    };
    for (std::size_t a : cn) {
      tuple = {a};
      visit();
      for (std::size_t b : cn) {
        tuple = {a, b};
        visit();
        for (std::size_t d : cn) {
          tuple = {a, b, d};
          visit();
        }
      }
    }
  });
}

void check_p1_3_nilary_quotient(Session& s, const Corpus& corpus, TheoremResult& res) {
  for_each_ring(s, corpus, [&](Ctx& c) {
    for (std::size_t k = 0; k < c.lattice().size(); ++k) {
      const auto& q = c.lattice()[k].elements();
      if (!s.holds(c, q, Predicate::completely_nilary)) continue;
      const auto& chain = c.analysis->chain(kTwo, k);
      for (std::size_t n = 1; n <= 3; ++n) {
        ++res.instances;
        ++res.hypothesis_instances;
        const auto& power = chain.powers[std::min(n, chain.powers.size()) - 1].elements();
        auto [qc, hom] = s.quotient(c, power);
        if (!s.holds(*qc, qc->zero(), Predicate::nilary)) {
          violate(res, describe(c, q) + " to the power " + std::to_string(n),
                  {s.record(c, q, Predicate::completely_nilary), s.record(*qc, qc->zero(), Predicate::nilary)});
        }
      }
    }
  });
}

void check_pquot(Session& s, const Corpus& corpus, TheoremResult& res) {
  for_each_proper_ideal(s, corpus, [&](Ctx& c, const ElementSet& i) {
    ++res.instances;
    auto [qc, hom] = s.quotient(c, i);
    const bool lhs = s.holds(c, i, Predicate::completely_nilary);
    const bool rhs = s.holds(*qc, qc->zero(), Predicate::completely_nilary);
    if (lhs || rhs) ++res.hypothesis_instances;
    if (lhs != rhs)
      violate(res, describe(c, i),
              {s.record(c, i, Predicate::completely_nilary), s.record(*qc, qc->zero(), Predicate::completely_nilary)});
  });
}

// Pairs K ⊆ I of two-sided ideals with the projection onto R/K.
template <typename F>
void for_each_nested_pair(Session& s, const Corpus& corpus, F&& f) {
  for_each_ring(s, corpus, [&](Ctx& c) {
    for (const auto& k : c.lattice())
      for (const auto& i : c.lattice())
        if (k.is_subset_of(i)) {
          auto [qc, hom] = s.quotient(c, k.elements());
          f(c, k.elements(), i.elements(), *qc, *hom);
        }
  });
}

void check_phom_forward(Session& s, const Corpus& corpus, TheoremResult& res) {
  for_each_nested_pair(s, corpus, [&](Ctx& c, const ElementSet& k, const ElementSet& i, Ctx& qc, const Hom& hom) {
    ++res.instances;
    if (!s.holds(c, i, Predicate::completely_nilary)) return;
    ++res.hypothesis_instances;
    const auto image = hom.image(i);
    if (!s.holds(qc, image, Predicate::completely_nilary))
      violate(res, describe(c, i) + " over kernel " + describe(c, k),
              {s.record(c, i, Predicate::completely_nilary), s.record(qc, image, Predicate::completely_nilary)});
  });
}

void check_phom_backward(Session& s, const Corpus& corpus, TheoremResult& res) {
  for_each_ring(s, corpus, [&](Ctx& c) {
    for (const auto& k : c.lattice()) {
      auto [qc, hom] = s.quotient(c, k.elements());
      for (const auto& target : qc->lattice()) {
        ++res.instances;
        const auto pre = hom->preimage(target.elements());
        const std::string where = describe(*qc, target.elements()) + " pulled back to " + c.ring->label();
        if (!c.lattice().index_of(pre) || !k.elements().is_subset_of(pre) || hom->image(pre) != target.elements()) {
          violate(res, where + ": preimage is not a matching ideal", {});
          continue;
        }
        if (!s.holds(*qc, target.elements(), Predicate::completely_nilary)) continue;
        ++res.hypothesis_instances;
        if (!s.holds(c, pre, Predicate::completely_nilary))
          violate(res, where,
                  {s.record(*qc, target.elements(), Predicate::completely_nilary),
                   s.record(c, pre, Predicate::completely_nilary)});
      }
    }
  });
}

void check_cquot_correspondence(Session& s, const Corpus& corpus, TheoremResult& res) {
  for_each_nested_pair(s, corpus, [&](Ctx& c, const ElementSet& k, const ElementSet& i, Ctx& qc, const Hom& hom) {
    ++res.instances;
    const auto image = hom.image(i);
    const bool lhs = s.holds(c, i, Predicate::completely_nilary);
    const bool rhs = s.holds(qc, image, Predicate::completely_nilary);
    if (lhs || rhs) ++res.hypothesis_instances;
    if (lhs != rhs)
      violate(res, describe(c, i) + " over kernel " + describe(c, k),
              {s.record(c, i, Predicate::completely_nilary), s.record(qc, image, Predicate::completely_nilary)});
  });
}

void check_pnil_lift(Session& s, const Corpus& corpus, TheoremResult& res) {
  for_each_ring(s, corpus, [&](Ctx& c) {
    for (const auto& i : c.lattice()) {
      ++res.instances;
      if (!is_nil(i).nil) continue;
      auto [qc, hom] = s.quotient(c, i.elements());
      if (!s.holds(*qc, qc->zero(), Predicate::completely_nilary)) continue;
      ++res.hypothesis_instances;
      if (!s.holds(c, c.zero(), Predicate::completely_nilary))
        violate(res, describe(c, i.elements()),
                {s.record(*qc, qc->zero(), Predicate::completely_nilary),
                 s.record(c, c.zero(), Predicate::completely_nilary)});
    }
  });
}

void pnilary_iff_cnilary(Session& s, Ctx& c, const ElementSet& i, TheoremResult& res) {
  ++res.instances;
  const bool pn = s.holds(c, i, Predicate::p_nilary);
  const bool cn = s.holds(c, i, Predicate::completely_nilary);
  if (pn || cn) ++res.hypothesis_instances;
  if (pn != cn)
    violate(res, describe(c, i), {s.record(c, i, Predicate::p_nilary), s.record(c, i, Predicate::completely_nilary)});
}

void check_pcomm(Session& s, const Corpus& corpus, TheoremResult& res) {
  for_each_ring(s, corpus, [&](Ctx& c) {
    if (c.ring->is_commutative()) pnilary_iff_cnilary(s, c, c.zero(), res);
  });
}

void check_ccomm_quotient(Session& s, const Corpus& corpus, TheoremResult& res) {
  for_each_ring(s, corpus, [&](Ctx& c) {
    for (const auto& i : c.lattice()) {
      auto [qc, hom] = s.quotient(c, i.elements());
      if (qc->ring->is_commutative()) pnilary_iff_cnilary(s, c, i.elements(), res);
    }
  });
}

// Ring-level implication on the zero ideal.
void zero_ideal_implication(Session& s, Ctx& c, TheoremResult& res, bool hypothesis, Predicate conclusion,
                            std::vector<Predicate> context) {
  ++res.instances;
  if (!hypothesis) return;
  ++res.hypothesis_instances;
  if (s.holds(c, c.zero(), conclusion)) return;
  std::vector<WitnessRecord> recs;
  for (Predicate p : context) recs.push_back(s.record(c, c.zero(), p));
  recs.push_back(s.record(c, c.zero(), conclusion));
  violate(res, describe(c, c.zero()), std::move(recs));
}

void check_pnil_nilpotent(Session& s, const Corpus& corpus, TheoremResult& res) {
  for_each_ring(s, corpus, [&](Ctx& c) {
    bool nil_ideals_nilpotent = true;
    for (const auto& i : c.lattice())
      if (is_nil(i).nil && !is_nilpotent_ideal(i)) nil_ideals_nilpotent = false;
    const bool hypothesis = nil_ideals_nilpotent && s.holds(c, c.zero(), Predicate::completely_nilary);
    zero_ideal_implication(s, c, res, hypothesis, Predicate::nilary, {Predicate::completely_nilary});
  });
}

void check_chain_cnilary(Session& s, const Corpus& corpus, TheoremResult& res) {
  // Finite rings are Artinian and Noetherian on both sides.
  for_each_ring(s, corpus, [&](Ctx& c) {
    zero_ideal_implication(s, c, res, s.holds(c, c.zero(), Predicate::completely_nilary), Predicate::nilary,
                           {Predicate::completely_nilary});
  });
}

void check_chain_pnilary(Session& s, const Corpus& corpus, TheoremResult& res) {
  for_each_ring(s, corpus, [&](Ctx& c) {
    zero_ideal_implication(s, c, res, s.holds(c, c.zero(), Predicate::p_nilary), Predicate::nilary,
                           {Predicate::p_nilary});
  });
}

void check_cchar(Session& s, const Corpus& corpus, TheoremResult& res) {
  for_each_ring(s, corpus, [&](Ctx& c) {
    if (!c.ring->has_nonzero_unity()) return;
    ++res.instances;
    if (!s.holds(c, c.zero(), Predicate::completely_nilary)) return;
    ++res.hypothesis_instances;
    const auto ch = characteristic(*c.ring);
    if (!ch.is_prime_power())
      violate(res, c.ring->label() + " has characteristic " + std::to_string(ch.value),
              {s.record(c, c.zero(), Predicate::completely_nilary)});
  });
}

void check_nil_ring_remark(Session& s, const Corpus& corpus, TheoremResult& res) {
  for_each_ring(s, corpus, [&](Ctx& c) {
    zero_ideal_implication(s, c, res, s.facts(c).nil, Predicate::completely_nilary, {});
  });
}

void check_prime_ring_remark(Session& s, const Corpus& corpus, TheoremResult& res) {
  for_each_ring(s, corpus, [&](Ctx& c) {
    zero_ideal_implication(s, c, res, s.holds(c, c.zero(), Predicate::prime), Predicate::nilary, {Predicate::prime});
  });
}

void check_hierarchy(Session& s, const Corpus& corpus, TheoremResult& res) {
  for_each_proper_ideal(s, corpus, [&](Ctx& c, const ElementSet& i) {
    ++res.instances;
    const bool n = s.holds(c, i, Predicate::nilary);
    const bool pn = s.holds(c, i, Predicate::p_nilary);
    if (n || pn) ++res.hypothesis_instances;
    if (n && !s.holds(c, i, Predicate::weakly_nilary))
      violate(res, describe(c, i), {s.record(c, i, Predicate::nilary), s.record(c, i, Predicate::weakly_nilary)});
    if (pn && !s.holds(c, i, Predicate::weakly_p_nilary))
      violate(res, describe(c, i),
              {s.record(c, i, Predicate::p_nilary), s.record(c, i, Predicate::weakly_p_nilary)});
  });
}

// Both the plain and the principal flavour of a weakly-nilary statement.
struct Flavour {
  Predicate weak;
  Predicate strong;
};
constexpr Flavour kFlavours[] = {{Predicate::weakly_nilary, Predicate::nilary},
                                 {Predicate::weakly_p_nilary, Predicate::p_nilary}};

void check_p2_3w(Session& s, const Corpus& corpus, TheoremResult& res) {
  for_each_proper_ideal(s, corpus, [&](Ctx& c, const ElementSet& i) {
    ++res.instances;
    bool counted = false;
    for (const auto& f : kFlavours) {
      if (!s.holds(c, c.zero(), f.strong) || !s.holds(c, i, f.weak)) continue;
      if (!counted) ++res.hypothesis_instances;
      counted = true;
      if (!s.holds(c, i, f.strong))
        violate(res, describe(c, i),
                {s.record(c, c.zero(), f.strong), s.record(c, i, f.weak), s.record(c, i, f.strong)});
    }
  });
}

void check_p2_4w(Session& s, const Corpus& corpus, TheoremResult& res) {
  for_each_proper_ideal(s, corpus, [&](Ctx& c, const ElementSet& i) {
    ++res.instances;
    const auto idx = *c.lattice().index_of(i);
    const bool square_zero = c.lattice()[c.analysis->product_index(kTwo, idx, idx)].is_zero();
    bool counted = false;
    for (const auto& f : kFlavours) {
      if (!s.holds(c, i, f.weak)) continue;
      if (!counted) ++res.hypothesis_instances;
      counted = true;
      if (!square_zero && !s.holds(c, i, f.strong))
        violate(res, describe(c, i) + " with nonzero square", {s.record(c, i, f.weak), s.record(c, i, f.strong)});
    }
  });
}

void check_c2_5w(Session& s, const Corpus& corpus, TheoremResult& res) {
  for_each_ring(s, corpus, [&](Ctx& c) {
    if (!s.holds(c, c.zero(), Predicate::semiprime)) return;
    for (const auto& ideal : c.lattice()) {
      if (!ideal.is_proper()) continue;
      const auto& i = ideal.elements();
      ++res.instances;
      ++res.hypothesis_instances;
      for (const auto& f : kFlavours) {
        const bool lhs = s.holds(c, i, f.weak);
        const bool rhs = ideal.is_zero() || s.holds(c, i, f.strong);
        if (lhs != rhs)
          violate(res, describe(c, i),
                  {s.record(c, c.zero(), Predicate::semiprime), s.record(c, i, f.weak), s.record(c, i, f.strong)});
      }
    }
  });
}

void check_p2_6(Session& s, const Corpus& corpus, TheoremResult& res) {
  for_each_ring(s, corpus, [&](Ctx& c) {
    if (!c.ring->has_nonzero_unity()) return;
    for (const auto& ideal : c.lattice()) {
      if (!ideal.is_proper()) continue;
      const auto& l = ideal.elements();
      ++res.instances;
      ++res.hypothesis_instances;
      const bool two = s.holds(c, l, Predicate::weakly_nilary);
      const bool right = s.holds(c, l, Predicate::weakly_nilary_right);
      const bool left = s.holds(c, l, Predicate::weakly_nilary_left);
      if (two != right || two != left)
        violate(res, describe(c, l),
                {s.record(c, l, Predicate::weakly_nilary), s.record(c, l, Predicate::weakly_nilary_right),
                 s.record(c, l, Predicate::weakly_nilary_left)});

      const bool p_two = s.holds(c, l, Predicate::weakly_p_nilary);
      const auto p_right = is_weakly_nilary_onesided(*c.analysis, ideal, IdealKind::right, true);
      const auto p_left = is_weakly_nilary_onesided(*c.analysis, ideal, IdealKind::left, true);
      if (p_two != p_right.holds || p_two != p_left.holds)
        violate(res, describe(c, l) + " (principal)",
                {s.record(c, l, Predicate::weakly_p_nilary),
                 WitnessRecord{c.ring, l, Predicate::weakly_nilary_right, p_right},
                 WitnessRecord{c.ring, l, Predicate::weakly_nilary_left, p_left}});
    }
  });
}

void expect_verdict(Session& s, Ctx& c, Predicate p, bool expected, TheoremResult& res) {
  if (s.holds(c, c.zero(), p) != expected)
    violate(res, c.ring->label() + ": " + std::string(predicate_name(p)) + " should be " + (expected ? "true" : "false"),
            {s.record(c, c.zero(), p)});
}

void check_example_2_2(Session& s, const Corpus&, TheoremResult& res) {
  auto ring = std::make_shared<const Ring>(make_zn(6));
  Ctx& c = s.ctx(ring);
  res.instances = res.hypothesis_instances = 1;
  expect_verdict(s, c, Predicate::weakly_nilary, true, res);
  expect_verdict(s, c, Predicate::weakly_p_nilary, true, res);
  expect_verdict(s, c, Predicate::nilary, false, res);

  const auto& v = s.verdict(c, c.zero(), Predicate::nilary);
  const auto* pair = std::get_if<IdealPairWitness>(&v.witness);
  if (!pair) {
    violate(res, "nilary counter-witness is not an ideal pair", {s.record(c, c.zero(), Predicate::nilary)});
    return;
  }
  const auto two = principal_ideal(*ring, 2).elements();
  const auto three = principal_ideal(*ring, 3).elements();
  const bool canonical = (pair->first.elements == two && pair->second.elements == three) ||
                         (pair->first.elements == three && pair->second.elements == two);
  const Ideal j(*ring, pair->first.elements, kTwo), k(*ring, pair->second.elements, kTwo);
  if (!canonical || !ideal_product(j, k).is_zero())
    violate(res, "nilary counter-witness is not (<2>,<3>) with zero product", {s.record(c, c.zero(), Predicate::nilary)});
}

void check_example_m2z2(Session& s, const Corpus&, TheoremResult& res) {
  const Ring z2 = make_zn(2);
  auto ring = std::make_shared<const Ring>(make_matrix_ring(z2, 2));
  Ctx& c = s.ctx(ring);
  res.instances = res.hypothesis_instances = 1;
  for (Predicate p : {Predicate::prime, Predicate::nilary, Predicate::p_nilary, Predicate::right_primary})
    expect_verdict(s, c, p, true, res);
  for (Predicate p : {Predicate::completely_nilary, Predicate::completely_right_primary})
    expect_verdict(s, c, p, false, res);

  const Element e11 = encode_matrix(z2, std::vector<Element>{1, 0, 0, 0});
  const Element e22 = encode_matrix(z2, std::vector<Element>{0, 0, 0, 1});
  const auto& v = s.verdict(c, c.zero(), Predicate::completely_nilary);
  const auto* pair = std::get_if<ElementPairWitness>(&v.witness);
  if (!pair || pair->a != e11 || pair->b != e22)
    violate(res, "completely_nilary counter-witness is not (diag(1,0), diag(0,1))",
            {s.record(c, c.zero(), Predicate::completely_nilary)});
  if (ring->mul(e11, e22) != 0 || element_is_nilpotent(*ring, e11) || element_is_nilpotent(*ring, e22))
    violate(res, "diag(1,0) diag(0,1) should be a zero product of non-nilpotents", {});
}

struct CaseEntry {
  TheoremCase info;
  CaseFn run;
};

const std::vector<CaseEntry>& registry() {
  static const std::vector<CaseEntry> cases = {
      {{"P1.2", "completely prime <=> completely semiprime and completely nilary", false}, check_p1_2},
      {{"P1.3", "products Q1..Qn (n<=3) of completely nilary ideals with Qk^s in their meet are completely nilary",
        false},
       check_p1_3},
      {{"P1.3-nilary-quot", "A/Q^n is a nilary ring for completely nilary Q, n<=3", false},
       check_p1_3_nilary_quotient},
      {{"Pquot", "I completely nilary <=> A/I completely nilary ring", false}, check_pquot},
      {{"Phom-fwd", "I completely nilary, ker <= I => phi(I) completely nilary", false}, check_phom_forward},
      {{"Phom-back", "I' completely nilary => phi^-1(I') completely nilary", false}, check_phom_backward},
      {{"Cquot-corr", "K <= I: I completely nilary <=> I/K completely nilary in A/K", false},
       check_cquot_correspondence},
      {{"Pnil-lift", "A/I completely nilary and I nil => A completely nilary", false}, check_pnil_lift},
      {{"Pcomm-pnilary", "commutative A: p-nilary ring <=> completely nilary ring", false}, check_pcomm},
      {{"Ccomm-quot", "A/I commutative: I p-nilary <=> I completely nilary", false}, check_ccomm_quotient},
      {{"Pnil-nilpotent", "completely nilary ring with nil ideals nilpotent => nilary", false},
       check_pnil_nilpotent},
      {{"Cchain-cnilary", "completely nilary Artinian/Noetherian (finite) ring => nilary", false},
       check_chain_cnilary},
      {{"Cchain-pnilary", "p-nilary Noetherian (finite) ring => nilary", false}, check_chain_pnilary},
      {{"Cchar", "completely nilary ring with unity has prime-power characteristic", false}, check_cchar},
      {{"Rnil-cnilary", "nil rings are completely nilary", false}, check_nil_ring_remark},
      {{"Rprime-nilary", "prime rings are nilary", false}, check_prime_ring_remark},
      {{"D2.1-hierarchy", "(p-)nilary proper ideals are weakly (p-)nilary", false}, check_hierarchy},
      {{"E2.2", "Z6: zero ideal weakly nilary but not nilary", true}, check_example_2_2},
      {{"P2.3w", "(p-)nilary ring: weakly (p-)nilary ideals are (p-)nilary", false}, check_p2_3w},
      {{"P2.4w", "weakly (p-)nilary I: I^2 = 0 or I (p-)nilary", false}, check_p2_4w},
      {{"C2.5w", "semiprime ring: weakly (p-)nilary <=> zero or (p-)nilary", false}, check_c2_5w},
      {{"P2.6", "unital ring: weakly (p-)nilary via two-sided, right and left ideals agree", false}, check_p2_6},
      {{"EM2Z2", "M2(Z2): prime, nilary, p-nilary, right primary, not completely nilary", true},
       check_example_m2z2},
  };
  return cases;
}

const CaseEntry& find_case(std::string_view id) {
  for (const auto& c : registry())
    if (c.info.id == id) return c;
  throw std::invalid_argument("unknown theorem case '" + std::string(id) + "'");
}

TheoremResult run_entry(const CaseEntry& entry, Session& session, const Corpus& corpus) {
  TheoremResult res;
  res.id = std::string(entry.info.id);
  res.description = std::string(entry.info.description);
  res.example = entry.info.example;
  const auto start = std::chrono::steady_clock::now();
  entry.run(session, corpus, res);
  res.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return res;
}

}  // namespace

bool HarnessReport::pass() const noexcept {
  for (const auto& c : cases)
    if (!c.pass()) return false;
  return true;
}

const std::vector<TheoremCase>& theorem_cases() {
  static const std::vector<TheoremCase> infos = [] {
    std::vector<TheoremCase> out;
    for (const auto& c : registry()) out.push_back(c.info);
    return out;
  }();
  return infos;
}

bool is_theorem_case(std::string_view id) {
  for (const auto& c : registry())
    if (c.info.id == id) return true;
  return false;
}

TheoremResult run_case(std::string_view id, const Corpus& corpus, const HarnessOptions& options) {
  const auto& entry = find_case(id);
  Session session(options);
  return run_entry(entry, session, corpus);
}

HarnessReport run_all(const Corpus& corpus, const HarnessOptions& options) {
  for (const auto& id : options.cases) find_case(id);
  HarnessReport report;
  report.corpus = corpus.labels();
  report.empty_corpus = corpus.empty();
  Session session(options);
  for (const auto& entry : registry()) {
    if (!options.cases.empty() &&
        std::find(options.cases.begin(), options.cases.end(), entry.info.id) == options.cases.end())
      continue;
    report.cases.push_back(run_entry(entry, session, corpus));
  }
  return report;
}

}  // namespace nilary
