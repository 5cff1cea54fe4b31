#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "nilary/ideal.hpp"
#include "nilary/ring_spec.hpp"
#include "support/oracles.hpp"

using namespace nilary;

TEST_CASE("spec strings build the named rings") {
  const Ring z6 = parse_ring_spec("Zn:6");
  CHECK(z6 == make_zn(6));
  CHECK(z6.label() == "Zn:6");

  CHECK(parse_ring_spec("M:2:Zn:2") == make_matrix_ring(make_zn(2), 2));
  CHECK(parse_ring_spec("T:2:Zn:3") == make_upper_triangular(make_zn(3), 2));
  CHECK(parse_ring_spec("zmul:4") == make_zero_mul(4));
  CHECK(parse_ring_spec("dsum(Zn:2,Zn:3)") == make_direct_sum(make_zn(2), make_zn(3)));
  CHECK(parse_ring_spec(" dsum( Zn:2 , Zn:3 ) ").label() == "dsum( Zn:2 , Zn:3 )");

  const Ring q = parse_ring_spec("quot(Zn:12,gen(4))");
  CHECK(q.order() == 4);
  CHECK(oracle::find_isomorphism(q, make_zn(4)).has_value());
  const Ring z12 = make_zn(12);
  CHECK(q == make_quotient(z12, principal_ideal(z12, 4).elements()).ring);

  SUBCASE("several generators") {
    const Ring r = parse_ring_spec("quot(Zn:12,gen(4,6))");
    CHECK(r.order() == 2);
  }
  SUBCASE("nesting") {
    const Ring r = parse_ring_spec("dsum(quot(Zn:12,gen(6)),M:1:Zn:3)");
    CHECK(r.order() == 18);
    CHECK(validate_ring(r).ok());
  }
}

TEST_CASE("malformed specs raise ParseError") {
  for (const char* bad : {"", "Zn:", "Zn:0", "Zn:x", "Zq:3", "dsum(Zn:2)", "dsum(Zn:2,Zn:3", "Zn:6 junk",
                          "quot(Zn:6,gen(7))", "quot(Zn:6,gen())", "M:0:Zn:2", "M:2:zmul:2", "zmul:0"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_ring_spec(bad), ParseError);
  }
  try {
    parse_ring_spec("dsum(Zn:2,Zq:3)");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 10);
  }
}

TEST_CASE("size caps apply while parsing") {
  Caps caps;
  caps.max_order = 20;
  CHECK_THROWS_AS(parse_ring_spec("Zn:21", caps), SizeCapError);
  CHECK_THROWS_AS(parse_ring_spec("M:2:Zn:3", caps), SizeCapError);
  CHECK_THROWS_AS(parse_ring_spec("dsum(Zn:5,Zn:5)", caps), SizeCapError);
  CHECK(parse_ring_spec("Zn:20", caps).order() == 20);
}

TEST_CASE("ring table files round trip") {
  for (const char* spec : {"Zn:6", "M:2:Zn:2", "zmul:3", "T:2:Zn:2", "Zn:1"}) {
    CAPTURE(spec);
    const Ring r = parse_ring_spec(spec);
    std::stringstream ss;
    write_ring_table(ss, r);
    const Ring back = read_ring_table(ss, spec);
    CHECK(back == r);
  }

  const auto path = std::filesystem::temp_directory_path() / "nilary_test_z4.ring";
  {
    std::ofstream f(path);
    write_ring_table(f, make_zn(4));
  }
  const Ring loaded = parse_ring_spec("file:" + path.string());
  CHECK(loaded == make_zn(4));
  CHECK(parse_ring_spec("dsum(file:" + path.string() + ",Zn:2)").order() == 8);
  std::filesystem::remove(path);
  CHECK_THROWS_AS(parse_ring_spec("file:" + path.string()), Error);
}

TEST_CASE("bad ring tables are rejected") {
  SUBCASE("element 0 is not zero") {
    // Z_2 with the labels swapped
    std::istringstream in("2\n1 0\n0 1\n1 0\n0 0\n");
    CHECK_THROWS_AS(read_ring_table(in, "swapped"), Error);
  }
  SUBCASE("axiom failure") {
    std::istringstream in("2\n0 1\n1 0\n0 1\n1 1\n");
    CHECK_THROWS_AS(read_ring_table(in, "bad"), Error);
  }
  SUBCASE("truncated") {
    std::istringstream in("2\n0 1\n1 0\n0 0\n");
    CHECK_THROWS_AS(read_ring_table(in, "short"), Error);
  }
  SUBCASE("out of range entry") {
    std::istringstream in("2\n0 1\n1 2\n0 0\n0 1\n");
    CHECK_THROWS_AS(read_ring_table(in, "range"), Error);
  }
  SUBCASE("unity that is not a unity") {
    std::istringstream in("2\n0 1\n1 0\n0 0\n0 1\none 0\n");
    CHECK_THROWS_AS(read_ring_table(in, "fake one"), Error);
  }
}
