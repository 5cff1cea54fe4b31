#include "nilary/replay.hpp"

#include <vector>

// Deliberately naive set arithmetic over std::vector<bool>; nothing here
// calls into the ideal engine or the classifier.

namespace nilary {

namespace {

using Set = std::vector<bool>;

Set to_set(const ElementSet& s, std::size_t n) {
  Set out(n, false);
  for (std::size_t e = 0; e < n && e < s.universe(); ++e) out[e] = s.contains(static_cast<Element>(e));
  return out;
}

bool subset(const Set& a, const Set& b) {
  for (std::size_t e = 0; e < a.size(); ++e)
    if (a[e] && !b[e]) return false;
  return true;
}

bool only_zero(const Set& a) {
  for (std::size_t e = 1; e < a.size(); ++e)
    if (a[e]) return false;
  return a[0];
}

std::size_t size_of(const Set& a) {
  std::size_t c = 0;
  for (bool b : a) c += b;
  return c;
}

Set subgroup(const Ring& r, const Set& gens) {
  const std::size_t n = r.order();
  Set s(n, false);
  s[0] = true;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t x = 0; x < n; ++x) {
      if (!s[x]) continue;
      for (std::size_t g = 0; g < n; ++g) {
        if (!gens[g]) continue;
        const Element y = r.add(static_cast<Element>(x), static_cast<Element>(g));
        if (!s[y]) s[y] = changed = true;
      }
    }
  }
  return s;
}

Set product(const Ring& r, const Set& a, const Set& b) {
  const std::size_t n = r.order();
  Set gens(n, false);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (a[x] && b[y]) gens[r.mul(static_cast<Element>(x), static_cast<Element>(y))] = true;
  return subgroup(r, gens);
}

bool closed_ideal(const Ring& r, const Set& s, IdealKind kind) {
  const std::size_t n = r.order();
  if (s.size() != n || !s[0]) return false;
  for (std::size_t x = 0; x < n; ++x) {
    if (!s[x]) continue;
    for (std::size_t y = 0; y < n; ++y) {
      const auto ex = static_cast<Element>(x), ey = static_cast<Element>(y);
      if (s[y] && !s[r.add(ex, ey)]) return false;
      if (kind != IdealKind::right && !s[r.mul(ey, ex)]) return false;
      if (kind != IdealKind::left && !s[r.mul(ex, ey)]) return false;
    }
  }
  return true;  // additive closure in a finite group implies a subgroup
}

Set generated(const Ring& r, Element g, IdealKind kind) {
  const std::size_t n = r.order();
  Set s(n, false);
  s[0] = s[g] = true;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t x = 0; x < n; ++x) {
      if (!s[x]) continue;
      for (std::size_t y = 0; y < n; ++y) {
        const auto ex = static_cast<Element>(x), ey = static_cast<Element>(y);
        std::vector<Element> next;
        if (s[y]) next.push_back(r.add(ex, ey));
        if (kind != IdealKind::right) next.push_back(r.mul(ey, ex));
        if (kind != IdealKind::left) next.push_back(r.mul(ex, ey));
        for (Element z : next)
          if (!s[z]) s[z] = changed = true;
      }
    }
  }
  return s;
}

// The descending chain J ⊇ J^2 ⊇ ... has at most |J| distinct terms, so
// checking |R| + 1 powers decides "no power of J lies in I".
bool some_power_in(const Ring& r, const Set& j, const Set& target) {
  Set p = j;
  for (std::size_t k = 1; k <= r.order() + 1; ++k) {
    if (subset(p, target)) return true;
    p = product(r, p, j);
  }
  return false;
}

bool some_element_power_in(const Ring& r, Element a, const Set& target) {
  Element x = a;
  for (std::size_t k = 1; k <= r.order() + 1; ++k) {
    if (target[x]) return true;
    x = r.mul(x, a);
  }
  return false;
}

Element element_power(const Ring& r, Element a, unsigned n) {
  Element x = a;
  for (unsigned k = 1; k < n; ++k) x = r.mul(x, a);
  return x;
}

ReplayOutcome ok() { return {true, "confirmed"}; }
ReplayOutcome bad(std::string why) { return {false, std::move(why)}; }

IdealKind expected_kind(Predicate p) {
  if (p == Predicate::weakly_nilary_right) return IdealKind::right;
  if (p == Predicate::weakly_nilary_left) return IdealKind::left;
  return IdealKind::two_sided;
}

bool principal_predicate(Predicate p) {
  return p == Predicate::p_nilary || p == Predicate::p_right_primary || p == Predicate::p_left_primary ||
         p == Predicate::weakly_p_nilary;
}

bool needs_proper(Predicate p) {
  return p == Predicate::completely_prime || p == Predicate::prime;
}

bool weakly(Predicate p) {
  return p == Predicate::weakly_nilary || p == Predicate::weakly_p_nilary || p == Predicate::weakly_nilary_right ||
         p == Predicate::weakly_nilary_left;
}

std::optional<std::string> check_ref(const Ring& r, const IdealRef& ref, Predicate p, Set& out) {
  if (ref.kind != expected_kind(p)) return "witness ideal has the wrong kind";
  out = to_set(ref.elements, r.order());
  if (!closed_ideal(r, out, ref.kind)) return "witness set is not an ideal of its kind";
  if (principal_predicate(p)) {
    if (!ref.generator) return "principal predicate witness lacks a generator";
    if (generated(r, *ref.generator, ref.kind) != out) return "witness ideal is not generated by its generator";
  }
  return std::nullopt;
}

}  // namespace

ReplayOutcome replay_witness(const Ring& r, const ElementSet& ideal, Predicate p, const Verdict& v) {
  const std::size_t n = r.order();
  const Set target = to_set(ideal, n);
  if (!closed_ideal(r, target, IdealKind::two_sided)) return bad("target is not a two-sided ideal");
  const bool proper = size_of(target) < n;

  if (v.not_applicable) {
    if (!weakly(p)) return bad("only weakly-* predicates can be not-applicable");
    if (!proper) return ok();
    if (expected_kind(p) != IdealKind::two_sided && !r.one()) return ok();
    return bad("not-applicable verdict on a proper ideal");
  }
  if (v.holds) {
    if (!std::holds_alternative<std::monostate>(v.witness)) return bad("holding verdict carries a counter-witness");
    return ok();
  }
  if (weakly(p) && !proper) return bad("weakly-* verdict on an improper ideal must be not-applicable");
  if (expected_kind(p) != IdealKind::two_sided && !r.one()) return bad("one-sided verdict needs unity");

  if (std::holds_alternative<std::monostate>(v.witness)) {
    if (needs_proper(p) && !proper) return ok();
    return bad("failing verdict without a witness");
  }

  if (const auto* w = std::get_if<ElementWitness>(&v.witness)) {
    if (p != Predicate::completely_semiprime) return bad("element witness for a non-element predicate");
    if (w->a >= n || target[w->a]) return bad("witness element lies in the ideal");
    if (!w->exponent || *w->exponent == 0) return bad("missing exponent");
    if (!target[element_power(r, w->a, *w->exponent)]) return bad("stated power is not in the ideal");
    return ok();
  }

  if (const auto* w = std::get_if<ElementPairWitness>(&v.witness)) {
    if (w->a >= n || w->b >= n) return bad("witness element out of range");
    if (!target[r.mul(w->a, w->b)]) return bad("product of the pair is not in the ideal");
    const bool a_in = target[w->a], b_in = target[w->b];
    const bool a_pow = some_element_power_in(r, w->a, target), b_pow = some_element_power_in(r, w->b, target);
    switch (p) {
      case Predicate::completely_prime:
        return (!a_in && !b_in) ? ok() : bad("a pair member lies in the ideal");
      case Predicate::completely_nilary:
        return (!a_pow && !b_pow) ? ok() : bad("some power of a pair member lies in the ideal");
      case Predicate::completely_right_primary:
        return (!a_in && !b_pow) ? ok() : bad("a in ideal or a power of b in ideal");
      case Predicate::completely_left_primary:
        return (!a_pow && !b_in) ? ok() : bad("a power of a in ideal or b in ideal");
      default:
        return bad("element pair witness for an ideal predicate");
    }
  }

  if (const auto* w = std::get_if<IdealWitness>(&v.witness)) {
    if (p != Predicate::semiprime) return bad("single-ideal witness for the wrong predicate");
    Set j;
    if (auto err = check_ref(r, w->ideal, p, j)) return bad(*err);
    if (!subset(product(r, j, j), target)) return bad("J^2 is not in the ideal");
    if (subset(j, target)) return bad("J lies in the ideal");
    return ok();
  }

  const auto& w = std::get<IdealPairWitness>(v.witness);
  Set j, k;
  if (auto err = check_ref(r, w.first, p, j)) return bad(*err);
  if (auto err = check_ref(r, w.second, p, k)) return bad(*err);
  const Set jk = product(r, j, k);
  if (!subset(jk, target)) return bad("JK is not in the ideal");
  const bool j_in = subset(j, target), k_in = subset(k, target);
  const bool j_pow = some_power_in(r, j, target), k_pow = some_power_in(r, k, target);
  switch (p) {
    case Predicate::prime:
      return (!j_in && !k_in) ? ok() : bad("J or K lies in the ideal");
    case Predicate::nilary:
    case Predicate::p_nilary:
      return (!j_pow && !k_pow) ? ok() : bad("a power of J or K lies in the ideal");
    case Predicate::right_primary:
    case Predicate::p_right_primary:
      return (!j_in && !k_pow) ? ok() : bad("J in ideal or a power of K in ideal");
    case Predicate::left_primary:
    case Predicate::p_left_primary:
      return (!j_pow && !k_in) ? ok() : bad("a power of J in ideal or K in ideal");
    case Predicate::weakly_nilary:
    case Predicate::weakly_p_nilary:
    case Predicate::weakly_nilary_right:
    case Predicate::weakly_nilary_left:
      if (only_zero(jk)) return bad("JK is zero");
      return (!j_pow && !k_pow) ? ok() : bad("a power of J or K lies in the ideal");
    default:
      return bad("ideal pair witness for an element predicate");
  }
}

}  // namespace nilary
