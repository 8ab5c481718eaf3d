#include <random>
#include <vector>

#include "doctest.h"
#include "updp/geometry.hpp"

using namespace updp;

namespace {

Point P(long x, long y) { return Point{Rat(x), Rat(y)}; }
Point P(const char* x, const char* y) { return Point{rat_from_string(x), rat_from_string(y)}; }

}  // namespace

TEST_CASE("rational parsing") {
  CHECK(rat_from_string("12") == Rat(12));
  CHECK(rat_from_string("-3") == Rat(-3));
  CHECK(rat_from_string("7/3") == Rat(7) / 3);
  CHECK(rat_from_string("-6/4") == Rat(-3) / 2);
  CHECK(rat_to_string(Rat(5)) == "5");
  CHECK(rat_to_string(Rat(7) / 3) == "7/3");
  CHECK_THROWS_AS(rat_from_string("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(rat_from_string("a"), std::invalid_argument);
  CHECK_THROWS_AS(rat_from_string("1.5"), std::invalid_argument);
}

TEST_CASE("horizontal crossings") {
  std::vector<Point> diag{P(0, 0), P(2, 2)};
  CHECK(horizontal_crossings(diag, Rat(1)) == std::vector<Rat>{Rat(1)});
  CHECK(horizontal_crossings(diag, Rat(3)).empty());

  // hand-solved interpolation, cross-checked against the two-sided form
  // x = xa*(yb-y)/(yb-ya) + xb*(y-ya)/(yb-ya) on the segment (1,2)-(3,4)
  std::vector<Point> kinked{P(0, 0), P(1, 2), P(3, 4)};
  Rat expected = Rat(1) * (Rat(4) - 3) / (Rat(4) - 2) + Rat(3) * (Rat(3) - 2) / (Rat(4) - 2);
  CHECK(expected == Rat(2));
  CHECK(horizontal_crossings(kinked, Rat(3)) == std::vector<Rat>{expected});

  // vertex hit and single-point polyline
  CHECK(horizontal_crossings(kinked, Rat(2)) == std::vector<Rat>{Rat(1)});
  std::vector<Point> dot{P(5, 7)};
  CHECK(horizontal_crossings(dot, Rat(7)) == std::vector<Rat>{Rat(5)});
  CHECK(horizontal_crossings(dot, Rat(6)).empty());
}

TEST_CASE("proper segment crossing") {
  auto seg = [](Point a, Point b) { return Segment{a, b}; };
  CHECK(segments_properly_cross(seg(P(0, 0), P(2, 2)), seg(P(0, 2), P(2, 0))));
  CHECK_FALSE(segments_properly_cross(seg(P(0, 0), P(1, 1)), seg(P(1, 1), P(2, 0))));

  // collinear overlap; oracle: parameters of (1,1) and (3,3) on the first
  // segment are 1/2 and 3/2, so the parameter interval overlap has length 1/2
  CHECK(segments_properly_cross(seg(P(0, 0), P(2, 2)), seg(P(1, 1), P(3, 3))));
  // collinear, single shared point only
  CHECK_FALSE(segments_properly_cross(seg(P(0, 0), P(1, 1)), seg(P(1, 1), P(2, 2))));
  // collinear containment
  CHECK(segments_properly_cross(seg(P(0, 0), P(3, 3)), seg(P(1, 1), P(2, 2))));
  // endpoint in the interior of the other: a touch, not a crossing
  CHECK_FALSE(segments_properly_cross(seg(P(0, 0), P(2, 0)), seg(P(1, 0), P(1, 5))));
  // disjoint
  CHECK_FALSE(segments_properly_cross(seg(P(0, 0), P(1, 0)), seg(P(0, 1), P(1, 1))));
  // vertical collinear overlap
  CHECK(segments_properly_cross(seg(P(0, 0), P(0, 2)), seg(P(0, 1), P(0, 3))));
}

TEST_CASE("point on segment") {
  CHECK(point_on_segment(P(1, 1), Segment{P(0, 0), P(2, 2)}));
  CHECK(point_on_segment(P(0, 0), Segment{P(0, 0), P(2, 2)}));
  CHECK_FALSE(point_on_segment(P(3, 3), Segment{P(0, 0), P(2, 2)}));
  CHECK_FALSE(point_on_segment(P(1, 0), Segment{P(0, 0), P(2, 2)}));
}

TEST_CASE("point side of a vertical path") {
  std::vector<Point> path{P(0, 0), P(0, 2)};
  CHECK(point_side(P(5, 1), path) == Side::Right);
  CHECK(point_side(P(0, 1), path) == Side::On);
  CHECK(point_side(P(-1, 0), path) == Side::Left);  // boundary height counts
  CHECK(point_side(P(1, 3), path) == Side::OutOfRange);
  CHECK(point_side(P("1/2", "1/3"), path) == Side::Right);
}

TEST_CASE("side classification is a partition and translation invariant") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> c(-6, 6);
  for (int iter = 0; iter < 500; ++iter) {
    std::vector<Point> path;
    long x = c(rng), y = c(rng);
    path.push_back(P(x, y));
    for (int i = 0; i < 3; ++i) {
      x += c(rng);
      y += 1 + std::abs(c(rng));
      path.push_back(P(x, y));
    }
    Point p = P(c(rng), c(rng));
    Side s = point_side(p, path);
    int hits = (s == Side::Right) + (s == Side::Left) + (s == Side::On) + (s == Side::OutOfRange);
    CHECK(hits == 1);

    Rat dx = Rat(c(rng)) / 3, dy = Rat(c(rng)) / 5;
    std::vector<Point> moved;
    for (const Point& q : path) moved.push_back(Point{q.x + dx, q.y + dy});
    CHECK(point_side(Point{p.x + dx, p.y + dy}, moved) == s);
  }
}
