#include <doctest.h>

#include "nilary/classifier.hpp"
#include "nilary/replay.hpp"

using namespace nilary;
using P = Predicate;

namespace {

ElementSet set_of(std::size_t n, std::initializer_list<Element> xs) {
  ElementSet s(n);
  for (Element x : xs) s.insert(x);
  return s;
}

Verdict failing(Witness w) { return Verdict{false, false, std::move(w)}; }

}  // namespace

TEST_CASE("genuine witnesses are confirmed") {
  const Ring z6 = make_zn(6);
  const ElementSet zero = z6.zero_set();
  CHECK(replay_witness(z6, zero, P::completely_prime, failing(ElementPairWitness{2, 3})).confirmed);
  CHECK(replay_witness(z6, zero, P::completely_nilary, failing(ElementPairWitness{3, 2})).confirmed);
  CHECK_FALSE(replay_witness(make_zn(12), set_of(12, {0, 4, 8}), P::completely_semiprime,
                             failing(ElementWitness{2, std::nullopt}))
                  .confirmed);
  const IdealRef j{set_of(6, {0, 3}), IdealKind::two_sided, Element{3}};
  const IdealRef k{set_of(6, {0, 2, 4}), IdealKind::two_sided, Element{2}};
  CHECK(replay_witness(z6, zero, P::nilary, failing(IdealPairWitness{j, k})).confirmed);
  CHECK(replay_witness(z6, zero, P::prime, failing(IdealPairWitness{j, k})).confirmed);

  const Ring z4 = make_zn(4);
  const IdealRef two{set_of(4, {0, 2}), IdealKind::two_sided, Element{2}};
  CHECK(replay_witness(z4, z4.zero_set(), P::semiprime, failing(IdealWitness{two})).confirmed);
  CHECK(replay_witness(make_zn(12), set_of(12, {0, 4, 8}), P::completely_semiprime,
                       failing(ElementWitness{2, 2u}))
            .confirmed);
}

TEST_CASE("forged witnesses are refused") {
  const Ring z6 = make_zn(6);
  const ElementSet zero = z6.zero_set();
  SUBCASE("product not in the ideal") {
    CHECK_FALSE(replay_witness(z6, zero, P::completely_prime, failing(ElementPairWitness{2, 5})).confirmed);
  }
  SUBCASE("factor inside the ideal") {
    CHECK_FALSE(replay_witness(z6, zero, P::completely_prime, failing(ElementPairWitness{0, 3})).confirmed);
  }
  SUBCASE("nilpotent factor defeats completely nilary") {
    const Ring z4 = make_zn(4);
    CHECK_FALSE(
        replay_witness(z4, z4.zero_set(), P::completely_nilary, failing(ElementPairWitness{2, 2})).confirmed);
  }
  SUBCASE("set that is not an ideal") {
    const IdealRef bogus{set_of(6, {0, 1}), IdealKind::two_sided, std::nullopt};
    const IdealRef k{set_of(6, {0, 2, 4}), IdealKind::two_sided, std::nullopt};
    CHECK_FALSE(replay_witness(z6, zero, P::prime, failing(IdealPairWitness{bogus, k})).confirmed);
  }
  SUBCASE("principal witness with the wrong generator") {
    const IdealRef j{set_of(6, {0, 3}), IdealKind::two_sided, Element{2}};
    const IdealRef k{set_of(6, {0, 2, 4}), IdealKind::two_sided, Element{2}};
    CHECK_FALSE(replay_witness(z6, zero, P::p_nilary, failing(IdealPairWitness{j, k})).confirmed);
  }
  SUBCASE("p_nilary needs principal ideals") {
    const IdealRef j{set_of(6, {0, 3}), IdealKind::two_sided, std::nullopt};
    const IdealRef k{set_of(6, {0, 2, 4}), IdealKind::two_sided, std::nullopt};
    CHECK_FALSE(replay_witness(z6, zero, P::p_nilary, failing(IdealPairWitness{j, k})).confirmed);
  }
  SUBCASE("weakly nilary witness with zero product") {
    const IdealRef j{set_of(6, {0, 3}), IdealKind::two_sided, Element{3}};
    const IdealRef k{set_of(6, {0, 2, 4}), IdealKind::two_sided, Element{2}};
    CHECK_FALSE(replay_witness(z6, zero, P::weakly_nilary, failing(IdealPairWitness{j, k})).confirmed);
  }
  SUBCASE("missing witness on a proper ideal") {
    CHECK_FALSE(replay_witness(z6, zero, P::nilary, failing(std::monostate{})).confirmed);
  }
  SUBCASE("wrong witness shape") {
    CHECK_FALSE(replay_witness(z6, zero, P::nilary, failing(ElementPairWitness{2, 3})).confirmed);
  }
  SUBCASE("not applicable on a proper ideal") {
    Verdict v;
    v.not_applicable = true;
    CHECK_FALSE(replay_witness(z6, zero, P::weakly_nilary, v).confirmed);
  }
}

TEST_CASE("holding verdicts and improper ideals") {
  const Ring z6 = make_zn(6);
  Verdict ok;
  ok.holds = true;
  CHECK(replay_witness(z6, z6.zero_set(), P::semiprime, ok).confirmed);
  CHECK(replay_witness(z6, z6.full_set(), P::prime, failing(std::monostate{})).confirmed);
  Verdict na;
  na.not_applicable = true;
  CHECK(replay_witness(z6, z6.full_set(), P::weakly_nilary, na).confirmed);
}
