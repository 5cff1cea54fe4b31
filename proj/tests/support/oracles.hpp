#pragma once

#include <optional>
#include <vector>

#include "nilary/ring.hpp"

// Test-only reference computations. Nothing here uses the ideal engine or
// the classifier.
namespace nilary::oracle {

// Bijection f with f(a+b)=f(a)+f(b), f(ab)=f(a)f(b), found by backtracking.
std::optional<std::vector<Element>> find_isomorphism(const Ring& a, const Ring& b);

// a^k computed by k-1 explicit multiplications.
Element power(const Ring& r, Element a, unsigned k);

// Least k in [1, order] with a^k = 0 by explicit powers, else nullopt.
std::optional<unsigned> nilpotency_by_powers(const Ring& r, Element a);

// All ideals of the kind by scanning subsets and testing closure element
// by element; limited to order <= 16.
std::vector<std::vector<Element>> ideals_by_subsets(const Ring& r, bool left, bool right);

// Definition-level check of "ab in I => a^n in I or b^m in I".
bool completely_nilary_by_definition(const Ring& r, const std::vector<bool>& ideal);

}  // namespace nilary::oracle
