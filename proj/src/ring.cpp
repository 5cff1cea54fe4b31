#include "nilary/ring.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace nilary {

namespace {

std::size_t checked_pow(std::size_t base, std::size_t exp, std::size_t cap) {
  std::size_t result = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && result > cap / base) return cap + 1;
    result *= base;
  }
  return result;
}

void require_cap(std::size_t order, const Caps& caps, const std::string& what) {
  if (order > caps.max_order) {
    std::ostringstream os;
    os << what << ": order exceeds the size cap of " << caps.max_order << " elements";
    throw SizeCapError(os.str());
  }
}

void require_unity(const Ring& base, const char* what) {
  if (!base.one()) throw std::invalid_argument(std::string(what) + ": base ring must have unity");
}

// Builds a matrix-style ring whose elements are vectors of base entries at
// the given (row, col) positions of a k x k matrix.
Ring make_matrix_like(const Ring& base, std::size_t k,
                      const std::vector<std::pair<std::size_t, std::size_t>>& positions,
                      const Caps& caps, std::string label) {
  const std::size_t b = base.order();
  const std::size_t n = checked_pow(b, positions.size(), caps.max_order);
  require_cap(n, caps, label);

  std::vector<std::vector<Element>> digits(n, std::vector<Element>(positions.size()));
  for (std::size_t idx = 0; idx < n; ++idx) {
    std::size_t v = idx;
    for (std::size_t p = 0; p < positions.size(); ++p) {
      digits[idx][p] = static_cast<Element>(v % b);
      v /= b;
    }
  }
  auto encode = [&](const std::vector<Element>& full) {
    std::size_t idx = 0;
    for (std::size_t p = positions.size(); p-- > 0;) {
      const auto [row, col] = positions[p];
      idx = idx * b + full[row * k + col];
    }
    return static_cast<Element>(idx);
  };

  std::vector<Element> add(n * n), mul(n * n);
  std::vector<Element> lhs(k * k), rhs(k * k), out(k * k);
  for (std::size_t x = 0; x < n; ++x) {
    std::fill(lhs.begin(), lhs.end(), 0);
    for (std::size_t p = 0; p < positions.size(); ++p)
      lhs[positions[p].first * k + positions[p].second] = digits[x][p];
    for (std::size_t y = 0; y < n; ++y) {
      std::fill(rhs.begin(), rhs.end(), 0);
      for (std::size_t p = 0; p < positions.size(); ++p)
        rhs[positions[p].first * k + positions[p].second] = digits[y][p];
      for (std::size_t e = 0; e < k * k; ++e) out[e] = base.add(lhs[e], rhs[e]);
      add[x * n + y] = encode(out);
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
          Element acc = 0;
          for (std::size_t t = 0; t < k; ++t) acc = base.add(acc, base.mul(lhs[i * k + t], rhs[t * k + j]));
          out[i * k + j] = acc;
        }
      }
      mul[x * n + y] = encode(out);
    }
  }

  std::vector<Element> identity(k * k, 0);
  for (std::size_t i = 0; i < k; ++i) identity[i * k + i] = *base.one();
  return Ring(n, std::move(add), std::move(mul), encode(identity), std::move(label));
}

}  // namespace

Ring::Ring(std::size_t order, std::vector<Element> add, std::vector<Element> mul,
           std::optional<Element> one, std::string label)
    : order_(order), add_(std::move(add)), mul_(std::move(mul)), one_(one), label_(std::move(label)) {
  if (order_ == 0) throw std::invalid_argument("ring order must be at least 1");
  if (order_ > std::numeric_limits<Element>::max() / order_)
    throw std::invalid_argument("ring order too large for element indices");
  if (add_.size() != order_ * order_ || mul_.size() != order_ * order_)
    throw std::invalid_argument("operation tables must be order x order");
  auto in_range = [&](Element e) { return e < order_; };
  if (!std::all_of(add_.begin(), add_.end(), in_range) || !std::all_of(mul_.begin(), mul_.end(), in_range))
    throw std::invalid_argument("table entry out of range");
  if (one_ && *one_ >= order_) throw std::invalid_argument("unity out of range");

  // Negatives that do not exist are left as 0; validate_ring reports them.
  neg_.assign(order_, 0);
  for (Element a = 0; a < order_; ++a) {
    for (Element b = 0; b < order_; ++b) {
      if (this->add(a, b) == 0) {
        neg_[a] = b;
        break;
      }
    }
  }
  commutative_ = true;
  for (Element a = 0; a < order_ && commutative_; ++a)
    for (Element b = a + 1; b < order_; ++b)
      if (this->mul(a, b) != this->mul(b, a)) {
        commutative_ = false;
        break;
      }
}

Ring Ring::relabeled(std::string label) const {
  Ring copy = *this;
  copy.label_ = std::move(label);
  return copy;
}

ElementSet Hom::image(const ElementSet& s) const {
  ElementSet out(target_order);
  s.for_each([&](Element a) { out.insert(map[a]); });
  return out;
}

ElementSet Hom::preimage(const ElementSet& s) const {
  ElementSet out(source_order);
  for (Element a = 0; a < source_order; ++a)
    if (s.contains(map[a])) out.insert(a);
  return out;
}

bool Hom::respects(const Ring& source, const Ring& target) const {
  if (source.order() != source_order || target.order() != target_order) return false;
  for (Element a = 0; a < source_order; ++a)
    for (Element b = 0; b < source_order; ++b) {
      if (map[source.add(a, b)] != target.add(map[a], map[b])) return false;
      if (map[source.mul(a, b)] != target.mul(map[a], map[b])) return false;
    }
  return true;
}

Ring make_zn(std::size_t n) {
  if (n == 0) throw std::invalid_argument("Zn: n must be at least 1");
  std::vector<Element> add(n * n), mul(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      add[a * n + b] = static_cast<Element>((a + b) % n);
      mul[a * n + b] = static_cast<Element>((a * b) % n);
    }
  return Ring(n, std::move(add), std::move(mul), static_cast<Element>(1 % n), "Zn:" + std::to_string(n));
}

Ring make_zero_mul(std::size_t n) {
  if (n == 0) throw std::invalid_argument("zmul: n must be at least 1");
  std::vector<Element> add(n * n), mul(n * n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) add[a * n + b] = static_cast<Element>((a + b) % n);
  std::optional<Element> one;
  if (n == 1) one = 0;
  return Ring(n, std::move(add), std::move(mul), one, "zmul:" + std::to_string(n));
}

Ring make_matrix_ring(const Ring& base, std::size_t k, const Caps& caps) {
  require_unity(base, "M");
  if (k == 0) throw std::invalid_argument("M: k must be at least 1");
  std::vector<std::pair<std::size_t, std::size_t>> positions;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) positions.emplace_back(i, j);
  return make_matrix_like(base, k, positions, caps, "M:" + std::to_string(k) + ":" + base.label());
}

Ring make_upper_triangular(const Ring& base, std::size_t k, const Caps& caps) {
  require_unity(base, "T");
  if (k == 0) throw std::invalid_argument("T: k must be at least 1");
  std::vector<std::pair<std::size_t, std::size_t>> positions;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) positions.emplace_back(i, j);
  return make_matrix_like(base, k, positions, caps, "T:" + std::to_string(k) + ":" + base.label());
}

Ring make_direct_sum(const Ring& r, const Ring& s, const Caps& caps) {
  std::string label = "dsum(" + r.label() + "," + s.label() + ")";
  if (s.order() != 0 && r.order() > caps.max_order / s.order())
    throw SizeCapError(label + ": order exceeds the size cap of " + std::to_string(caps.max_order) +
                       " elements");
  const std::size_t m = s.order();
  const std::size_t n = r.order() * m;
  std::vector<Element> add(n * n), mul(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const auto a1 = static_cast<Element>(x / m), b1 = static_cast<Element>(x % m);
      const auto a2 = static_cast<Element>(y / m), b2 = static_cast<Element>(y % m);
      add[x * n + y] = static_cast<Element>(r.add(a1, a2) * m + s.add(b1, b2));
      mul[x * n + y] = static_cast<Element>(r.mul(a1, a2) * m + s.mul(b1, b2));
    }
  std::optional<Element> one;
  if (r.one() && s.one()) one = static_cast<Element>(*r.one() * m + *s.one());
  return Ring(n, std::move(add), std::move(mul), one, std::move(label));
}

Quotient make_quotient(const Ring& r, const ElementSet& ideal) {
  const std::size_t n = r.order();
  if (ideal.universe() != n || !ideal.contains(0)) throw std::invalid_argument("quotient: not an ideal of this ring");
  bool closed = true;
  ideal.for_each([&](Element x) {
    if (!closed) return;
    if (!ideal.contains(r.neg(x))) closed = false;
    ideal.for_each([&](Element y) {
      if (!ideal.contains(r.add(x, y))) closed = false;
    });
    for (Element a = 0; a < n && closed; ++a)
      if (!ideal.contains(r.mul(a, x)) || !ideal.contains(r.mul(x, a))) closed = false;
  });
  if (!closed) throw std::invalid_argument("quotient: not a two-sided ideal");

  std::vector<Element> rep(n);
  for (Element a = 0; a < n; ++a) {
    Element best = a;
    ideal.for_each([&](Element x) { best = std::min(best, r.add(a, x)); });
    rep[a] = best;
  }
  std::vector<Element> reps;
  for (Element a = 0; a < n; ++a)
    if (rep[a] == a) reps.push_back(a);
  std::vector<Element> index_of(n, 0);
  for (std::size_t i = 0; i < reps.size(); ++i) index_of[reps[i]] = static_cast<Element>(i);

  const std::size_t q = reps.size();
  std::vector<Element> add(q * q), mul(q * q);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j) {
      add[i * q + j] = index_of[rep[r.add(reps[i], reps[j])]];
      mul[i * q + j] = index_of[rep[r.mul(reps[i], reps[j])]];
    }
  std::optional<Element> one;
  if (r.one()) one = index_of[rep[*r.one()]];

  std::ostringstream label;
  label << "quot(" << r.label() << ",{";
  bool first = true;
  ideal.for_each([&](Element e) {
    label << (first ? "" : ",") << e;
    first = false;
  });
  label << "})";

  Hom hom;
  hom.source_order = n;
  hom.target_order = q;
  hom.map.resize(n);
  for (Element a = 0; a < n; ++a) hom.map[a] = index_of[rep[a]];
  hom.surjective = true;
  return Quotient{Ring(q, std::move(add), std::move(mul), one, label.str()), std::move(hom)};
}

Element encode_matrix(const Ring& base, std::span<const Element> entries) {
  std::size_t idx = 0;
  for (std::size_t p = entries.size(); p-- > 0;) idx = idx * base.order() + entries[p];
  return static_cast<Element>(idx);
}

std::vector<Element> decode_matrix(const Ring& base, std::size_t k, Element index) {
  std::vector<Element> entries(k * k);
  std::size_t v = index;
  for (auto& e : entries) {
    e = static_cast<Element>(v % base.order());
    v /= base.order();
  }
  return entries;
}

ValidationReport validate_ring(const Ring& r) {
  ValidationReport report;
  const auto n = static_cast<Element>(r.order());
  auto fail = [&](const char* axiom, std::vector<Element> els) {
    report.violations.push_back({axiom, std::move(els)});
  };
  for (Element a = 0; a < n; ++a) {
    if (r.add(0, a) != a || r.add(a, 0) != a) fail("additive identity", {a});
    if (r.add(a, r.neg(a)) != 0) fail("additive inverse", {a});
    if (r.one() && (r.mul(*r.one(), a) != a || r.mul(a, *r.one()) != a)) fail("unity", {a});
    for (Element b = 0; b < n; ++b) {
      if (r.add(a, b) != r.add(b, a)) fail("additive commutativity", {a, b});
      for (Element c = 0; c < n; ++c) {
        if (r.add(r.add(a, b), c) != r.add(a, r.add(b, c))) fail("additive associativity", {a, b, c});
        if (r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c))) fail("multiplicative associativity", {a, b, c});
        if (r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c))) fail("left distributivity", {a, b, c});
        if (r.mul(r.add(a, b), c) != r.add(r.mul(a, c), r.mul(b, c))) fail("right distributivity", {a, b, c});
      }
    }
  }
  return report;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

Characteristic characteristic(const Ring& r) {
  if (!r.one()) throw std::invalid_argument("characteristic: ring has no unity");
  Characteristic c;
  Element x = *r.one();
  c.value = 1;
  while (x != 0) {
    x = r.add(x, *r.one());
    ++c.value;
  }
  c.factors = factorize(c.value);
  return c;
}

std::vector<Element> power_sequence(const Ring& r, Element a) {
  std::vector<Element> seq;
  ElementSet seen(r.order());
  Element x = a;
  while (seen.insert(x)) {
    seq.push_back(x);
    x = r.mul(x, a);
  }
  return seq;
}

std::optional<unsigned> element_is_nilpotent(const Ring& r, Element a) {
  const auto seq = power_sequence(r, a);
  for (std::size_t i = 0; i < seq.size(); ++i)
    if (seq[i] == 0) return static_cast<unsigned>(i + 1);
  return std::nullopt;
}

}  // namespace nilary
