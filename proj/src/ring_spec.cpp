#include "nilary/ring_spec.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

#include "nilary/ideal.hpp"

namespace nilary {

namespace {

class SpecParser {
 public:
  SpecParser(std::string_view text, const Caps& caps) : text_(text), caps_(caps) {}

  Ring parse() {
    Ring r = spec();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
    return r;
  }

 private:
  Ring spec() {
    skip_ws();
    const std::size_t start = pos_;
    if (accept("Zn:")) {
      const auto n = number();
      if (n == 0) throw ParseError("Zn needs n >= 1", start);
      check_order(n, start);
      return make_zn(n);
    }
    if (accept("zmul:")) {
      const auto n = number();
      if (n == 0) throw ParseError("zmul needs n >= 1", start);
      check_order(n, start);
      return make_zero_mul(n);
    }
    if (accept("M:") || accept("T:")) {
      const bool full = text_[start] == 'M';
      const auto k = number();
      if (k == 0) throw ParseError("matrix size must be >= 1", start);
      expect(":");
      Ring base = spec();
      if (!base.one()) throw ParseError("matrix base ring must have unity", start);
      return wrap(start, [&] {
        return full ? make_matrix_ring(base, k, caps_) : make_upper_triangular(base, k, caps_);
      });
    }
    if (accept("dsum(")) {
      Ring a = spec();
      expect(",");
      Ring b = spec();
      expect(")");
      return wrap(start, [&] { return make_direct_sum(a, b, caps_); });
    }
    if (accept("quot(")) {
      Ring base = spec();
      expect(",");
      skip_ws();
      expect("gen(");
      std::vector<Element> gens;
      do {
        const std::size_t at = pos_;
        const auto e = number();
        if (e >= base.order()) throw ParseError("generator out of range", at);
        gens.push_back(static_cast<Element>(e));
      } while (accept(","));
      expect(")");
      expect(")");
      const Ideal ideal = ideal_generated_by(base, gens, IdealKind::two_sided);
      return make_quotient(base, ideal.elements()).ring;
    }
    if (accept("file:")) {
      const std::size_t from = pos_;
      while (pos_ < text_.size() && text_[pos_] != ',' && text_[pos_] != ')') ++pos_;
      const std::string path(text_.substr(from, pos_ - from));
      if (path.empty()) throw ParseError("empty file path", from);
      Ring r = wrap(start, [&] { return load_ring_file(path); });
      check_order(r.order(), start);
      return r;
    }
    throw ParseError("expected a ring constructor", start);
  }

  template <typename F>
  Ring wrap(std::size_t start, F&& build) {
    try {
      return build();
    } catch (const SizeCapError&) {
      throw;
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw ParseError(e.what(), start);
    }
  }

  void check_order(std::size_t n, std::size_t at) const {
    if (n > caps_.max_order)
      throw SizeCapError("ring at position " + std::to_string(at) + " exceeds the size cap of " +
                         std::to_string(caps_.max_order) + " elements");
  }

  std::size_t number() {
    skip_ws();
    const std::size_t start = pos_;
    std::size_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<std::size_t>(text_[pos_] - '0');
      if (value > (std::size_t{1} << 40)) throw ParseError("number too large", start);
      ++pos_;
    }
    if (pos_ == start) throw ParseError("expected a number", start);
    return value;
  }

  bool accept(std::string_view token) {
    skip_ws();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view token) {
    if (!accept(token)) throw ParseError("expected '" + std::string(token) + "'", pos_);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  const Caps& caps_;
  std::size_t pos_ = 0;
};

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

Ring parse_ring_spec(std::string_view text, const Caps& caps) {
  Ring r = SpecParser(text, caps).parse();
  return r.relabeled(trim(text));
}

Ring read_ring_table(std::istream& in, std::string label) {
  std::size_t n = 0;
  if (!(in >> n) || n == 0) throw Error("ring table: expected a positive order on the first line");
  if (n > 4096) throw SizeCapError("ring table: order " + std::to_string(n) + " is too large");
  auto read_table = [&](const char* name) {
    std::vector<Element> t(n * n);
    for (auto& e : t) {
      long long v = -1;
      if (!(in >> v)) throw Error(std::string("ring table: truncated ") + name + " table");
      if (v < 0 || static_cast<std::size_t>(v) >= n)
        throw Error(std::string("ring table: ") + name + " entry " + std::to_string(v) + " out of range");
      e = static_cast<Element>(v);
    }
    return t;
  };
  auto add = read_table("addition");
  auto mul = read_table("multiplication");
  std::optional<Element> one;
  std::string word;
  if (in >> word) {
    long long v = -1;
    if (word != "one" || !(in >> v) || v < 0 || static_cast<std::size_t>(v) >= n)
      throw Error("ring table: expected 'one <index>' after the tables");
    one = static_cast<Element>(v);
    if (in >> word) throw Error("ring table: unexpected trailing content");
  }
  for (std::size_t a = 0; a < n; ++a)
    if (add[a] != a || add[a * n] != a) throw Error("ring table: element 0 is not the additive zero");
  Ring r(n, std::move(add), std::move(mul), one, std::move(label));
  const auto report = validate_ring(r);
  if (!report.ok()) {
    std::ostringstream os;
    os << "ring table: " << report.violations.size() << " axiom violation(s), first: "
       << report.violations.front().axiom << " at (";
    for (std::size_t k = 0; k < report.violations.front().elements.size(); ++k)
      os << (k ? "," : "") << report.violations.front().elements[k];
    os << ")";
    throw Error(os.str());
  }
  return r;
}

Ring load_ring_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open ring file '" + path + "'");
  return read_ring_table(in, "file:" + path);
}

void write_ring_table(std::ostream& out, const Ring& r) {
  const std::size_t n = r.order();
  out << n << '\n';
  for (auto table : {r.add_table(), r.mul_table()}) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) out << (b ? " " : "") << table[a * n + b];
      out << '\n';
    }
  }
  if (r.one()) out << "one " << *r.one() << '\n';
}

}  // namespace nilary
