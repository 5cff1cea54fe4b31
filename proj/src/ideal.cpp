#include "nilary/ideal.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace nilary {

namespace {

bool closes_left(IdealKind k) { return k != IdealKind::right; }
bool closes_right(IdealKind k) { return k != IdealKind::left; }

void require_same_ring(const Ideal& i, const Ideal& j, const char* what) {
  if (&i.ring() != &j.ring()) throw std::invalid_argument(std::string(what) + ": ideals of different rings");
}

}  // namespace

std::string_view to_string(IdealKind kind) {
  switch (kind) {
    case IdealKind::two_sided:
      return "two-sided";
    case IdealKind::left:
      return "left";
    case IdealKind::right:
      return "right";
  }
  return "two-sided";
}

std::optional<IdealKind> parse_ideal_kind(std::string_view text) {
  if (text == "two-sided") return IdealKind::two_sided;
  if (text == "left") return IdealKind::left;
  if (text == "right") return IdealKind::right;
  return std::nullopt;
}

bool is_ideal(const Ring& r, const ElementSet& s, IdealKind kind) {
  if (s.universe() != r.order() || !s.contains(0)) return false;
  const auto n = static_cast<Element>(r.order());
  bool ok = true;
  s.for_each([&](Element x) {
    if (!ok) return;
    if (!s.contains(r.neg(x))) ok = false;
    s.for_each([&](Element y) {
      if (!s.contains(r.add(x, y))) ok = false;
    });
    for (Element a = 0; a < n && ok; ++a) {
      if (closes_left(kind) && !s.contains(r.mul(a, x))) ok = false;
      if (closes_right(kind) && !s.contains(r.mul(x, a))) ok = false;
    }
  });
  return ok;
}

ElementSet additive_closure(const Ring& r, const ElementSet& generators) {
  ElementSet members(r.order());
  members.insert(0);
  std::vector<Element> order{0};
  const auto gens = generators.elements();
  for (std::size_t k = 0; k < order.size(); ++k) {
    const Element x = order[k];
    for (Element g : gens) {
      const Element y = r.add(x, g);
      if (members.insert(y)) order.push_back(y);
    }
  }
  return members;
}

Ideal zero_ideal(const Ring& r, IdealKind kind) { return Ideal(r, r.zero_set(), kind); }
Ideal whole_ring(const Ring& r, IdealKind kind) { return Ideal(r, r.full_set(), kind); }

Ideal ideal_generated_by(const Ring& r, std::span<const Element> seed, IdealKind kind) {
  const auto n = static_cast<Element>(r.order());
  ElementSet members(n);
  std::vector<Element> list;
  auto push = [&](Element e) {
    if (members.insert(e)) list.push_back(e);
  };
  push(0);
  for (Element e : seed) {
    if (e >= n) throw std::out_of_range("ideal seed element out of range");
    push(e);
  }
  for (std::size_t k = 0; k < list.size(); ++k) {
    const Element x = list[k];
    push(r.neg(x));
    for (std::size_t j = 0; j <= k; ++j) push(r.add(x, list[j]));
    for (Element a = 0; a < n; ++a) {
      if (closes_left(kind)) push(r.mul(a, x));
      if (closes_right(kind)) push(r.mul(x, a));
    }
  }
  return Ideal(r, std::move(members), kind);
}

Ideal principal_ideal(const Ring& r, Element a, IdealKind kind) {
  const Element seed[] = {a};
  return ideal_generated_by(r, seed, kind);
}

Ideal ideal_sum(const Ideal& i, const Ideal& j) {
  require_same_ring(i, j, "ideal_sum");
  if (i.kind() != j.kind()) throw std::invalid_argument("ideal_sum: ideals of different kinds");
  const Ring& r = i.ring();
  ElementSet out(r.order());
  i.elements().for_each([&](Element x) { j.elements().for_each([&](Element y) { out.insert(r.add(x, y)); }); });
  return Ideal(r, std::move(out), i.kind());
}

Ideal ideal_intersection(const Ideal& i, const Ideal& j) {
  require_same_ring(i, j, "ideal_intersection");
  if (i.kind() != j.kind()) throw std::invalid_argument("ideal_intersection: ideals of different kinds");
  return Ideal(i.ring(), i.elements() & j.elements(), i.kind());
}

Ideal ideal_product(const Ideal& i, const Ideal& j) {
  require_same_ring(i, j, "ideal_product");
  if (i.kind() != j.kind())
    throw std::invalid_argument("ideal_product: unsupported kind pairing " + std::string(to_string(i.kind())) +
                                " x " + std::string(to_string(j.kind())));
  const Ring& r = i.ring();
  ElementSet products(r.order());
  i.elements().for_each([&](Element x) { j.elements().for_each([&](Element y) { products.insert(r.mul(x, y)); }); });
  return Ideal(r, additive_closure(r, products), i.kind());
}

PowerChain power_chain(const Ideal& i) {
  PowerChain chain;
  chain.powers.push_back(i);
  while (true) {
    Ideal next = ideal_product(chain.powers.back(), i);
    if (next.elements() == chain.powers.back().elements()) break;
    chain.powers.push_back(std::move(next));
  }
  chain.stable_index = static_cast<unsigned>(chain.powers.size());
  return chain;
}

std::optional<unsigned> some_power_contained(const PowerChain& chain, const ElementSet& target) {
  if (!chain.stable_value().elements().is_subset_of(target)) return std::nullopt;
  for (std::size_t k = 0; k < chain.powers.size(); ++k)
    if (chain.powers[k].elements().is_subset_of(target)) return static_cast<unsigned>(k + 1);
  return std::nullopt;
}

std::optional<unsigned> some_power_contained(const Ideal& j, const Ideal& i) {
  require_same_ring(j, i, "some_power_contained");
  return some_power_contained(power_chain(j), i.elements());
}

std::optional<unsigned> element_power_in(const Ring& r, Element a, const ElementSet& target) {
  ElementSet seen(r.order());
  Element x = a;
  for (unsigned n = 1; seen.insert(x); ++n) {
    if (target.contains(x)) return n;
    x = r.mul(x, a);
  }
  return std::nullopt;
}

NilResult is_nil(const Ideal& i) {
  NilResult result;
  i.elements().for_each([&](Element a) {
    if (result.nil && !element_is_nilpotent(i.ring(), a)) {
      result.nil = false;
      result.non_nilpotent = a;
    }
  });
  return result;
}

std::optional<unsigned> is_nilpotent_ideal(const Ideal& i) {
  return some_power_contained(power_chain(i), i.ring().zero_set());
}

IdealLattice::IdealLattice(const Ring& ring, IdealKind kind, std::vector<ElementSet> masks)
    : ring_(&ring), kind_(kind) {
  std::sort(masks.begin(), masks.end(), canonical_less);
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  ideals_.reserve(masks.size());
  for (auto& m : masks) {
    index_.emplace(m, ideals_.size());
    ideals_.emplace_back(ring, std::move(m), kind);
  }
}

std::optional<std::size_t> IdealLattice::index_of(const ElementSet& mask) const {
  auto it = index_.find(mask);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<ElementSet> IdealLattice::masks() const {
  std::vector<ElementSet> out;
  out.reserve(ideals_.size());
  for (const auto& i : ideals_) out.push_back(i.elements());
  return out;
}

IdealLattice enumerate_ideals(const Ring& r, IdealKind kind, const Caps& caps) {
  if (r.order() > caps.lattice_order)
    throw SizeCapError("enumerate_ideals: order " + std::to_string(r.order()) + " exceeds the lattice cap of " +
                       std::to_string(caps.lattice_order));
  std::unordered_map<ElementSet, bool, ElementSetHash> seen;
  std::vector<Ideal> found;
  auto add = [&](Ideal i) {
    if (seen.emplace(i.elements(), true).second) {
      if (found.size() >= caps.lattice_count)
        throw SizeCapError("enumerate_ideals: more than " + std::to_string(caps.lattice_count) + " ideals");
      found.push_back(std::move(i));
    }
  };
  for (Element a = 0; a < r.order(); ++a) add(principal_ideal(r, a, kind));

  // Every ideal is the sum of the principal ideals of its members, so
  // closing under pairwise sums reaches the whole lattice.
  for (std::size_t k = 0; k < found.size(); ++k) {
    for (std::size_t j = 0; j < k; ++j) {
      if (found[j].is_subset_of(found[k]) || found[k].is_subset_of(found[j])) continue;
      add(ideal_sum(found[k], found[j]));
    }
  }
  std::vector<ElementSet> masks;
  masks.reserve(found.size());
  for (auto& i : found) masks.push_back(i.elements());
  return IdealLattice(r, kind, std::move(masks));
}

IdealLattice enumerate_ideals_bruteforce(const Ring& r, IdealKind kind, const Caps& caps) {
  if (r.order() > caps.bruteforce_order)
    throw SizeCapError("enumerate_ideals_bruteforce: order " + std::to_string(r.order()) + " exceeds " +
                       std::to_string(caps.bruteforce_order));
  const std::size_t n = r.order();
  std::vector<ElementSet> masks;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    if (!(bits & 1u)) continue;
    ElementSet s(n);
    for (std::size_t e = 0; e < n; ++e)
      if ((bits >> e) & 1u) s.insert(static_cast<Element>(e));
    if (is_ideal(r, s, kind)) masks.push_back(std::move(s));
  }
  return IdealLattice(r, kind, std::move(masks));
}

}  // namespace nilary
