#include <doctest.h>

#include "nilary/corpus.hpp"
#include "nilary/hunt.hpp"

using namespace nilary;

namespace {

const Corpus& builtin() {
  static const Corpus c = build_builtin_corpus();
  return c;
}

bool has_match(const std::vector<HuntMatch>& ms, const std::string& label, std::size_t ideal_size) {
  for (const auto& m : ms)
    if (m.ring_label == label && m.ideal.count() == ideal_size) return true;
  return false;
}

}  // namespace

TEST_CASE("query parsing") {
  CHECK_NOTHROW(HuntQuery::parse("nilary"));
  CHECK_NOTHROW(HuntQuery::parse("not (prime or nilary) and unital"));
  for (const char* bad : {"", "and", "nilary and", "(nilary", "nilary)", "primes", "not", "nilary nilary"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(HuntQuery::parse(bad), QueryError);
  }
}

TEST_CASE("precedence") {
  PropertyReport rep;
  RingFacts facts;
  facts.unital = true;
  rep.verdicts[static_cast<std::size_t>(Predicate::prime)].holds = true;
  HuntInstance in{&rep, &facts, false, true};
  // not binds tighter than and, and tighter than or
  CHECK(HuntQuery::parse("not nilary and prime").matches(in));
  CHECK_FALSE(HuntQuery::parse("not (nilary or prime)").matches(in));
  CHECK(HuntQuery::parse("nilary and commutative or prime").matches(in));
  CHECK_FALSE(HuntQuery::parse("nilary and (commutative or prime)").matches(in));
  CHECK(HuntQuery::parse("zero and unital").matches(in));
  CHECK_FALSE(HuntQuery::parse("nil").matches(in));

  SUBCASE("not-applicable verdicts count as false") {
    auto& v = rep.verdicts[static_cast<std::size_t>(Predicate::weakly_nilary)];
    v.holds = false;
    v.not_applicable = true;
    CHECK_FALSE(HuntQuery::parse("weakly_nilary").matches(in));
    CHECK(HuntQuery::parse("not weakly_nilary").matches(in));
  }
}

TEST_CASE("reference hunts over the builtin corpus") {
  const auto weak = hunt(builtin(), HuntQuery::parse("weakly_nilary and not nilary"), HuntTarget::zero_ideal);
  CHECK(has_match(weak, "Zn:6", 1));

  const auto prime = hunt(builtin(), HuntQuery::parse("prime and not completely_nilary"), HuntTarget::zero_ideal);
  CHECK(has_match(prime, "M:2:Zn:2", 1));

  CHECK(hunt(builtin(), HuntQuery::parse("completely_prime and not prime"), HuntTarget::any_ideal).empty());
  CHECK(hunt(builtin(), HuntQuery::parse("completely_nilary and unital and not prime_power_char"),
             HuntTarget::zero_ideal)
            .empty());

  SUBCASE("any-ideal target sees more instances") {
    const auto q = HuntQuery::parse("proper");
    const auto zero = hunt(builtin(), q, HuntTarget::zero_ideal);
    const auto any = hunt(builtin(), q, HuntTarget::any_ideal);
    CHECK(any.size() > zero.size());
    // Zn:1 and zmul:1 are the zero rings
    CHECK(zero.size() + 2 == builtin().size());
  }
}
