#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nilary/element_set.hpp"

namespace nilary {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SizeCapError : public Error {
 public:
  using Error::Error;
};

// Construction limits. The defaults keep every operation desk-sized.
struct Caps {
  std::size_t max_order = 4096;       // largest ring any constructor will build
  std::size_t lattice_order = 1024;   // largest ring whose ideal lattice we enumerate
  std::size_t lattice_count = 65536;  // largest lattice we are willing to hold
  std::size_t bruteforce_order = 16;  // subset-scan oracle limit
};

// A finite ring given by its Cayley tables. Possibly non-unital and
// non-commutative. Immutable after construction.
class Ring {
 public:
  // Throws std::invalid_argument if the tables are not order x order with
  // entries in [0, order).
  Ring(std::size_t order, std::vector<Element> add, std::vector<Element> mul,
       std::optional<Element> one, std::string label);

  std::size_t order() const noexcept { return order_; }
  const std::string& label() const noexcept { return label_; }
  const std::optional<Element>& one() const noexcept { return one_; }

  // A unity that differs from zero, i.e. a ring with 1 in the usual sense.
  bool has_nonzero_unity() const noexcept { return one_.has_value() && *one_ != 0; }

  Element add(Element a, Element b) const noexcept { return add_[a * order_ + b]; }
  Element mul(Element a, Element b) const noexcept { return mul_[a * order_ + b]; }
  Element neg(Element a) const noexcept { return neg_[a]; }
  Element sub(Element a, Element b) const noexcept { return add(a, neg(b)); }

  std::span<const Element> add_table() const noexcept { return add_; }
  std::span<const Element> mul_table() const noexcept { return mul_; }

  bool is_commutative() const noexcept { return commutative_; }

  ElementSet zero_set() const { return ElementSet::singleton(order_, 0); }
  ElementSet full_set() const { return ElementSet::full(order_); }

  Ring relabeled(std::string label) const;

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.order_ == b.order_ && a.add_ == b.add_ && a.mul_ == b.mul_ && a.one_ == b.one_;
  }

 private:
  std::size_t order_;
  std::vector<Element> add_;
  std::vector<Element> mul_;
  std::vector<Element> neg_;
  std::optional<Element> one_;
  std::string label_;
  bool commutative_ = false;
};

// Ring homomorphism as an explicit element map.
struct Hom {
  std::size_t source_order = 0;
  std::size_t target_order = 0;
  std::vector<Element> map;
  bool surjective = false;

  Element operator()(Element a) const { return map[a]; }
  ElementSet image(const ElementSet& s) const;
  ElementSet preimage(const ElementSet& s) const;
  ElementSet kernel() const { return preimage(ElementSet::singleton(target_order, 0)); }
  // True iff the map respects both operations between the given rings.
  bool respects(const Ring& source, const Ring& target) const;
};

struct Quotient {
  Ring ring;
  Hom projection;
};

Ring make_zn(std::size_t n);
Ring make_zero_mul(std::size_t n);
Ring make_matrix_ring(const Ring& base, std::size_t k, const Caps& caps = {});
Ring make_upper_triangular(const Ring& base, std::size_t k, const Caps& caps = {});
Ring make_direct_sum(const Ring& r, const Ring& s, const Caps& caps = {});

// Quotient by a two-sided ideal given as an element set. Coset
// representatives are the least element index of each coset, and quotient
// elements are numbered in representative order. Throws std::invalid_argument
// if the set is not a two-sided ideal.
Quotient make_quotient(const Ring& r, const ElementSet& ideal);

// Index of a matrix entry list (row-major, first entry least significant).
Element encode_matrix(const Ring& base, std::span<const Element> entries);
std::vector<Element> decode_matrix(const Ring& base, std::size_t k, Element index);

struct AxiomViolation {
  std::string axiom;
  std::vector<Element> elements;
};

struct ValidationReport {
  std::vector<AxiomViolation> violations;
  bool ok() const noexcept { return violations.empty(); }
};

// Exhaustive axiom scan. Lists every violating tuple.
ValidationReport validate_ring(const Ring& r);

struct Characteristic {
  std::uint64_t value = 0;
  std::vector<std::pair<std::uint64_t, unsigned>> factors;
  // p^k with k >= 1
  bool is_prime_power() const noexcept { return factors.size() == 1; }
};

// Additive order of the unity. Throws std::invalid_argument without unity.
Characteristic characteristic(const Ring& r);

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

// Least n >= 1 with a^n = 0.
std::optional<unsigned> element_is_nilpotent(const Ring& r, Element a);

// The distinct powers a, a^2, ... in order, stopping before the first repeat.
std::vector<Element> power_sequence(const Ring& r, Element a);

}  // namespace nilary
