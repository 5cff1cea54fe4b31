#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "nilary/element_set.hpp"
#include "nilary/ring.hpp"

namespace nilary {

enum class IdealKind { two_sided, left, right };

std::string_view to_string(IdealKind kind);
std::optional<IdealKind> parse_ideal_kind(std::string_view text);

// An ideal of a ring, held as a bitmask over element indices. The ring is
// referenced, not owned; it must outlive the ideal.
class Ideal {
 public:
  Ideal(const Ring& ring, ElementSet elements, IdealKind kind)
      : ring_(&ring), elements_(std::move(elements)), kind_(kind) {}

  const Ring& ring() const noexcept { return *ring_; }
  const ElementSet& elements() const noexcept { return elements_; }
  IdealKind kind() const noexcept { return kind_; }

  bool contains(Element e) const noexcept { return elements_.contains(e); }
  std::size_t size() const noexcept { return elements_.count(); }
  bool is_zero() const noexcept { return size() == 1; }
  bool is_proper() const noexcept { return size() < ring_->order(); }
  bool is_subset_of(const Ideal& other) const noexcept { return elements_.is_subset_of(other.elements_); }

  friend bool operator==(const Ideal& a, const Ideal& b) noexcept {
    return a.ring_ == b.ring_ && a.kind_ == b.kind_ && a.elements_ == b.elements_;
  }

 private:
  const Ring* ring_;
  ElementSet elements_;
  IdealKind kind_;
};

// Checks the ideal axioms of the given kind directly.
bool is_ideal(const Ring& r, const ElementSet& s, IdealKind kind);

// Subgroup of (R, +) generated by the given elements.
ElementSet additive_closure(const Ring& r, const ElementSet& generators);

Ideal zero_ideal(const Ring& r, IdealKind kind = IdealKind::two_sided);
Ideal whole_ring(const Ring& r, IdealKind kind = IdealKind::two_sided);

// Least ideal of the kind containing the seed (Za + aR + Ra + RaR for a
// two-sided principal ideal; the seed itself is always a member).
Ideal ideal_generated_by(const Ring& r, std::span<const Element> seed, IdealKind kind);
Ideal principal_ideal(const Ring& r, Element a, IdealKind kind = IdealKind::two_sided);

Ideal ideal_sum(const Ideal& i, const Ideal& j);
Ideal ideal_intersection(const Ideal& i, const Ideal& j);
// Defined for two-sided x two-sided, right x right and left x left.
Ideal ideal_product(const Ideal& i, const Ideal& j);

// I, I^2, ... up to and including the first power equal to its successor.
struct PowerChain {
  std::vector<Ideal> powers;
  unsigned stable_index = 1;

  const Ideal& base() const { return powers.front(); }
  const Ideal& stable_value() const { return powers.back(); }
};

PowerChain power_chain(const Ideal& i);

// Least m with J^m contained in the target set.
std::optional<unsigned> some_power_contained(const PowerChain& chain, const ElementSet& target);
std::optional<unsigned> some_power_contained(const Ideal& j, const Ideal& i);

// Least n >= 1 with a^n in the target set.
std::optional<unsigned> element_power_in(const Ring& r, Element a, const ElementSet& target);

struct NilResult {
  bool nil = true;
  std::optional<Element> non_nilpotent;
};

NilResult is_nil(const Ideal& i);
// Least m with I^m = 0.
std::optional<unsigned> is_nilpotent_ideal(const Ideal& i);

// Every ideal of one kind, sorted by (size, mask).
class IdealLattice {
 public:
  IdealLattice(const Ring& ring, IdealKind kind, std::vector<ElementSet> masks);

  const Ring& ring() const noexcept { return *ring_; }
  IdealKind kind() const noexcept { return kind_; }
  std::size_t size() const noexcept { return ideals_.size(); }
  const std::vector<Ideal>& ideals() const noexcept { return ideals_; }
  const Ideal& operator[](std::size_t k) const { return ideals_[k]; }
  auto begin() const noexcept { return ideals_.begin(); }
  auto end() const noexcept { return ideals_.end(); }

  std::optional<std::size_t> index_of(const ElementSet& mask) const;
  std::vector<ElementSet> masks() const;

 private:
  const Ring* ring_;
  IdealKind kind_;
  std::vector<Ideal> ideals_;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> index_;
};

// Principal ideals closed under pairwise sums. Throws SizeCapError beyond
// caps.lattice_order elements or caps.lattice_count ideals.
IdealLattice enumerate_ideals(const Ring& r, IdealKind kind, const Caps& caps = {});

// Scans all 2^order subsets. Throws SizeCapError beyond caps.bruteforce_order.
IdealLattice enumerate_ideals_bruteforce(const Ring& r, IdealKind kind, const Caps& caps = {});

}  // namespace nilary
