#include <set>

#include "doctest.h"
#include "support.hpp"
#include "updp/instance_io.hpp"

using namespace updp;

namespace {

Drawing make(const std::string& text) { return parse_instance(text).drawing; }

}  // namespace

TEST_CASE("validator accepts a single upward edge") {
  CHECK(validate_drawing(make("v 0 0 0\nv 1 0 1\ne 0 1\n")).ok());
}

TEST_CASE("validator flags a non-upward edge") {
  Report r = validate_drawing(make("v 0 0 1\nv 1 0 0\ne 0 1\n"));
  REQUIRE_FALSE(r.ok());
  CHECK(r.to_string().find("non-upward edge 0->1") != std::string::npos);
}

TEST_CASE("validator flags an X crossing") {
  Report r = validate_drawing(make("v 0 0 0\nv 1 2 2\nv 2 0 2\nv 3 2 0\ne 0 1\ne 3 2\n"));
  REQUIRE_FALSE(r.ok());
  CHECK(r.to_string().find("crosses") != std::string::npos);
}

TEST_CASE("validator flags coincident vertices, vertex-on-edge, horizontal edges") {
  CHECK_FALSE(validate_drawing(make("v 0 0 0\nv 1 0 0\n")).ok());
  Report r = validate_drawing(make("v 0 0 0\nv 1 2 2\nv 2 1 1\ne 0 1\n"));
  REQUIRE_FALSE(r.ok());
  CHECK(r.to_string().find("vertex 2 lies on edge 0->1") != std::string::npos);
  CHECK_FALSE(validate_drawing(make("v 0 0 0\nv 1 1 0\ne 0 1\n")).ok());
}

TEST_CASE("collinear overlapping edges are crossings") {
  Report r = validate_drawing(make("v 0 0 0\nv 1 2 2\nv 2 1 1\nv 3 3 3\ne 0 2\ne 2 3\ne 0 1\n"));
  // 0->1 overlaps both 0->2 and 2->3
  CHECK_FALSE(r.ok());
}

TEST_CASE("out adjacency is rightmost first") {
  // edges fan out from vertex 0; expected order by ascending angle
  Drawing d = make(
      "v 0 0 0\n"
      "v 1 3 1\n"   // almost horizontal right
      "v 2 1 2\n"   // steep right
      "v 3 0 5\n"   // straight up
      "v 4 -2 1\n"  // up-left
      "e 0 3\ne 0 1\ne 0 4\ne 0 2\n");
  REQUIRE(validate_drawing(d).ok());
  std::vector<int> expect{d.index_of(1), d.index_of(2), d.index_of(3), d.index_of(4)};
  CHECK(d.out[d.index_of(0)] == expect);
}

TEST_CASE("parallel validator produces the identical report") {
  testsupport::Rng rng(11);
  for (int iter = 0; iter < 50; ++iter) {
    // raw random edge soup, frequently invalid
    std::uniform_int_distribution<int> c(-3, 3), pick(0, 7);
    DrawingBuilder db;
    std::set<std::pair<int, int>> pts;
    for (int v = 0; v < 8; ++v) {
      int x = c(rng), y = c(rng);
      while (!pts.insert({x, y}).second) {
        x = c(rng);
        y = c(rng);
      }
      db.vertex(v, Point{Rat(x), Rat(y)});
    }
    for (int e = 0; e < 10; ++e) {
      int u = pick(rng), v = pick(rng);
      if (u != v) db.edge(u, v);
    }
    Drawing d = db.build();
    CHECK(validate_drawing(d, false).to_string() == validate_drawing(d, true).to_string());
  }
}

TEST_CASE("instance validation") {
  Instance one = parse_instance("v 0 0 0\nv 1 0 1\ne 0 1\np 0 1\n");
  CHECK(validate_instance(one).ok());

  Instance self = one;
  self.pairs[0].second = self.pairs[0].first;
  CHECK_FALSE(validate_instance(self).ok());

  Instance shared = parse_instance("v 0 0 0\nv 1 0 1\nv 2 1 0\ne 0 1\np 0 1\np 2 1\n");
  Report r = validate_instance(shared);
  REQUIRE_FALSE(r.ok());
  CHECK(r.to_string().find("more than one terminal") != std::string::npos);

  Instance none = one;
  none.pairs.clear();
  CHECK_FALSE(validate_instance(none).ok());
}

TEST_CASE("random generated drawings are always valid") {
  testsupport::Rng rng(3);
  for (int iter = 0; iter < 100; ++iter) {
    Drawing d = testsupport::random_drawing(rng, 7, 9);
    CHECK(validate_drawing(d).ok());
  }
}
