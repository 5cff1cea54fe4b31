#include "nilary/hunt.hpp"

#include <cctype>
#include <variant>

namespace nilary {

namespace {

enum class Atom { proper, commutative, unital, nil, zero, prime_power_char };

std::optional<Atom> parse_atom(std::string_view word) {
  if (word == "proper") return Atom::proper;
  if (word == "commutative") return Atom::commutative;
  if (word == "unital") return Atom::unital;
  if (word == "nil") return Atom::nil;
  if (word == "zero") return Atom::zero;
  if (word == "prime_power_char") return Atom::prime_power_char;
  return std::nullopt;
}

}  // namespace

struct HuntQuery::Node {
  enum class Op { leaf, negate, conj, disj } op = Op::leaf;
  std::variant<Predicate, Atom> leaf;
  std::shared_ptr<const Node> lhs, rhs;

  bool eval(const HuntInstance& in) const {
    switch (op) {
      case Op::negate:
        return !lhs->eval(in);
      case Op::conj:
        return lhs->eval(in) && rhs->eval(in);
      case Op::disj:
        return lhs->eval(in) || rhs->eval(in);
      case Op::leaf:
        break;
    }
    if (const auto* p = std::get_if<Predicate>(&leaf)) {
      const auto& v = (*in.report)[*p];
      return v.holds && !v.not_applicable;
    }
    switch (std::get<Atom>(leaf)) {
      case Atom::proper:
        return in.report->proper;
      case Atom::commutative:
        return in.facts->commutative;
      case Atom::unital:
        return in.facts->unital;
      case Atom::nil:
        return in.ideal_is_nil;
      case Atom::zero:
        return in.ideal_is_zero;
      case Atom::prime_power_char:
        return in.facts->unital && in.facts->characteristic && in.facts->characteristic->is_prime_power();
    }
    return false;
  }
};

namespace {

using NodePtr = std::shared_ptr<const HuntQuery::Node>;

class QueryParser {
 public:
  explicit QueryParser(std::string_view text) : text_(text) { advance(); }

  NodePtr parse() {
    auto node = disjunction();
    if (!token_.empty()) fail("unexpected '" + token_ + "'");
    return node;
  }

 private:
  NodePtr disjunction() {
    auto node = conjunction();
    while (token_ == "or") {
      advance();
      node = binary(HuntQuery::Node::Op::disj, node, conjunction());
    }
    return node;
  }

  NodePtr conjunction() {
    auto node = unary();
    while (token_ == "and") {
      advance();
      node = binary(HuntQuery::Node::Op::conj, node, unary());
    }
    return node;
  }

  NodePtr unary() {
    if (token_ == "not") {
      advance();
      auto n = std::make_shared<HuntQuery::Node>();
      n->op = HuntQuery::Node::Op::negate;
      n->lhs = unary();
      return n;
    }
    if (token_ == "(") {
      advance();
      auto inner = disjunction();
      if (token_ != ")") fail("expected ')'");
      advance();
      return inner;
    }
    if (token_.empty()) fail("unexpected end of query");
    auto n = std::make_shared<HuntQuery::Node>();
    if (auto p = parse_predicate(token_)) {
      n->leaf = *p;
    } else if (auto a = parse_atom(token_)) {
      n->leaf = *a;
    } else {
      fail("unknown predicate '" + token_ + "'");
    }
    advance();
    return n;
  }

  static NodePtr binary(HuntQuery::Node::Op op, NodePtr l, NodePtr r) {
    auto n = std::make_shared<HuntQuery::Node>();
    n->op = op;
    n->lhs = std::move(l);
    n->rhs = std::move(r);
    return n;
  }

  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    token_start_ = pos_;
    if (pos_ == text_.size()) {
      token_.clear();
      return;
    }
    if (text_[pos_] == '(' || text_[pos_] == ')') {
      token_ = std::string(1, text_[pos_++]);
      return;
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' ||
                                   text_[pos_] == '-'))
      ++pos_;
    if (pos_ == start) fail(std::string("unexpected character '") + text_[pos_] + "'");
    token_ = std::string(text_.substr(start, pos_ - start));
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw QueryError("hunt query: " + what + " at position " + std::to_string(token_start_));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t token_start_ = 0;
  std::string token_;
};

}  // namespace

HuntQuery HuntQuery::parse(std::string_view text) {
  HuntQuery q;
  q.text_ = std::string(text);
  q.root_ = QueryParser(text).parse();
  return q;
}

bool HuntQuery::matches(const HuntInstance& instance) const { return root_->eval(instance); }

std::vector<HuntMatch> hunt(const Corpus& corpus, const HuntQuery& query, HuntTarget target) {
  std::vector<HuntMatch> matches;
  for (const auto& entry : corpus.entries) {
    const RingAnalysis analysis(*entry.ring, corpus.caps);
    const RingFacts facts = ring_facts(*entry.ring);
    const auto& lattice = analysis.lattice();
    const std::size_t count = target == HuntTarget::zero_ideal ? 1 : lattice.size();
    for (std::size_t k = 0; k < count; ++k) {
      PropertyReport report = classify_ideal(analysis, lattice[k]);
      HuntInstance instance{&report, &facts, is_nil(lattice[k]).nil, lattice[k].is_zero()};
      if (query.matches(instance)) {
        report.facts = facts;
        matches.push_back(HuntMatch{entry.spec, lattice[k].elements(), std::move(report)});
      }
    }
  }
  return matches;
}

}  // namespace nilary
