#include <random>

#include "doctest.h"
#include "support.hpp"
#include "updp/instance_io.hpp"

using namespace updp;

TEST_CASE("parse a minimal instance") {
  Instance inst = parse_instance("v 1 0 0\nv 2 0 1\ne 1 2\np 1 2\n");
  CHECK(inst.drawing.n() == 2);
  CHECK(inst.drawing.m() == 1);
  REQUIRE(inst.pairs.size() == 1);
  CHECK(inst.drawing.id[inst.pairs[0].first] == 1);
  CHECK(inst.drawing.id[inst.pairs[0].second] == 2);
}

TEST_CASE("parse errors carry line numbers") {
  try {
    parse_instance("v 1 0 0\nv 2 0 1\ne 1 9\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 3);
    CHECK(std::string(e.what()).find("undeclared vertex 9") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_instance("v 1 0 0\nv 1 1 1\n"), ParseError);
  CHECK_THROWS_AS(parse_instance("q 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_instance("v 1 0\n"), ParseError);
  CHECK_THROWS_AS(parse_instance("v 1 0 0 junk\n"), ParseError);
  CHECK_THROWS_AS(parse_instance("v 1 1.5 0\n"), ParseError);
  CHECK_THROWS_AS(parse_instance("p 1 2\n"), ParseError);
}

TEST_CASE("comments, blank lines, rational coordinates") {
  Instance inst = parse_instance(
      "# a comment\n"
      "v 10 -1/2 0   # trailing comment\n"
      "\n"
      "v 3 7/3 4\n"
      "e 10 3\n");
  CHECK(inst.drawing.n() == 2);
  CHECK(inst.drawing.pt[inst.drawing.index_of(10)].x == Rat(-1) / 2);
}

TEST_CASE("serialize emits sorted vertex and edge blocks, pairs in order") {
  Instance inst = parse_instance("v 5 1 1\nv 2 0 0\ne 2 5\np 5 2\np 2 5\n");
  std::string text = serialize_instance(inst);
  CHECK(text ==
        "v 2 0 0\n"
        "v 5 1 1\n"
        "e 2 5\n"
        "p 5 2\n"
        "p 2 5\n");
}

TEST_CASE("round trip on random instances") {
  testsupport::Rng rng(42);
  for (int iter = 0; iter < 200; ++iter) {
    Drawing d = testsupport::random_drawing(rng, 8, 10);
    Instance inst = testsupport::random_instance(rng, std::move(d), 2);
    Instance back = parse_instance(serialize_instance(inst));
    CHECK(instances_equal(inst, back));
    CHECK(serialize_instance(back) == serialize_instance(inst));
  }
}
