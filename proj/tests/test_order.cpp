#include <algorithm>

#include "doctest.h"
#include "support.hpp"
#include "updp/instance_io.hpp"
#include "updp/oracle.hpp"
#include "updp/order.hpp"

using namespace updp;

namespace {

Drawing three_rails() {
  return parse_instance(
             "v 0 0 0\nv 1 0 2\nv 2 1 0\nv 3 1 2\nv 4 2 0\nv 5 2 2\n"
             "e 0 1\ne 2 3\ne 4 5\n")
      .drawing;
}

Path path_of(const Drawing& d, std::initializer_list<long long> ids) {
  Path p;
  for (long long id : ids) p.v.push_back(d.index_of(id));
  return p;
}

// disjoint path pairs harvested from small random drawings
std::vector<std::pair<PathSet, Drawing>> random_disjoint_sets(int want, int paths_per_set) {
  testsupport::Rng rng(555);
  std::vector<std::pair<PathSet, Drawing>> out;
  while (static_cast<int>(out.size()) < want) {
    Drawing d = testsupport::random_drawing(rng, 10, 14);
    Instance inst = testsupport::random_instance(rng, std::move(d), paths_per_set);
    SolveOutcome so = exact_solve(inst, {200000});
    if (so.status != SolveStatus::Solved) continue;
    out.emplace_back(so.solution, inst.drawing);
  }
  return out;
}

}  // namespace

TEST_CASE("precedes on parallel rails") {
  Drawing d = three_rails();
  Path left = path_of(d, {0, 1});
  Path mid = path_of(d, {2, 3});
  Path right = path_of(d, {4, 5});
  CHECK(precedes(left, right, d));
  CHECK_FALSE(precedes(right, left, d));
  CHECK(precedes(left, mid, d));
  CHECK(precedes(mid, right, d));
}

TEST_CASE("disjoint height ranges are incomparable") {
  Drawing d = parse_instance(
                  "v 0 0 0\nv 1 0 1\nv 2 5 3\nv 3 5 4\n"
                  "e 0 1\ne 2 3\n")
                  .drawing;
  Path low = path_of(d, {0, 1});
  Path high = path_of(d, {2, 3});
  CHECK_FALSE(precedes(low, high, d));
  CHECK_FALSE(precedes(high, low, d));
}

TEST_CASE("order closure and maximal elements on rails") {
  Drawing d = three_rails();
  PathSet ps{path_of(d, {0, 1}), path_of(d, {2, 3}), path_of(d, {4, 5})};
  OrderClosure c = order_closure(ps, d);
  REQUIRE(c.ok());
  CHECK(c.related == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}});
  CHECK(maximal_elements(c) == std::vector<int>{2});
}

TEST_CASE("maximal elements of an empty relation") {
  Drawing d = parse_instance("v 0 0 0\nv 1 0 1\nv 2 5 3\nv 3 5 4\ne 0 1\ne 2 3\n").drawing;
  PathSet ps{path_of(d, {0, 1}), path_of(d, {2, 3})};
  OrderClosure c = order_closure(ps, d);
  REQUIRE(c.ok());
  CHECK(c.related.empty());
  CHECK(maximal_elements(c) == std::vector<int>{0, 1});
}

TEST_CASE("two predecessors of one maximum") {
  Drawing d = parse_instance(
                  "v 0 0 0\nv 1 0 2\nv 2 2 5\nv 3 2 7\nv 4 9 0\nv 5 9 7\n"
                  "e 0 1\ne 2 3\ne 4 5\n")
                  .drawing;
  // 0-1 and 2-3 have disjoint heights (incomparable); both left of 4-5
  PathSet ps{path_of(d, {0, 1}), path_of(d, {2, 3}), path_of(d, {4, 5})};
  OrderClosure c = order_closure(ps, d);
  REQUIRE(c.ok());
  CHECK(c.related == std::vector<std::pair<int, int>>{{0, 2}, {1, 2}});
  CHECK(maximal_elements(c) == std::vector<int>{2});
}

TEST_CASE("precedes agrees with a dense-sampling oracle") {
  auto sets = random_disjoint_sets(120, 2);
  for (const auto& [ps, d] : sets) {
    std::vector<Point> a = polyline(d, ps[0]);
    std::vector<Point> b = polyline(d, ps[1]);
    Rat lo = std::max(a.front().y, b.front().y);
    Rat hi = std::min(a.back().y, b.back().y);
    bool sampled_right = false, sampled_left = false;
    if (lo <= hi) {
      for (int i = 0; i <= 1000; ++i) {
        Rat y = lo + (hi - lo) * i / 1000;
        Rat xa = horizontal_crossings(a, y)[0];
        Rat xb = horizontal_crossings(b, y)[0];
        if (xb > xa) sampled_right = true;
        if (xb < xa) sampled_left = true;
      }
    }
    // sampling can only under-approximate; the exact result must cover it
    if (sampled_right) CHECK(precedes(ps[0], ps[1], d));
    if (sampled_left) CHECK(precedes(ps[1], ps[0], d));
    if (!sampled_right) CHECK(precedes(ps[0], ps[1], d) == sampled_right);
  }
}

TEST_CASE("order axioms on oracle-produced disjoint sets") {
  auto sets = random_disjoint_sets(150, 3);
  int pairs_checked = 0;
  for (const auto& [ps, d] : sets) {
    for (const Path& p : ps) {
      CHECK_FALSE(precedes(p, p, d));  // irreflexive
      // height-sorted points occur in path order
      std::vector<Point> line = polyline(d, p);
      for (size_t i = 0; i + 1 < line.size(); ++i) CHECK(line[i].y < line[i + 1].y);
    }
    for (size_t i = 0; i < ps.size(); ++i)
      for (size_t j = i + 1; j < ps.size(); ++j) {
        ++pairs_checked;
        bool ij = precedes(ps[i], ps[j], d);
        bool ji = precedes(ps[j], ps[i], d);
        CHECK_FALSE((ij && ji));  // antisymmetric
        SideContact sc = side_contacts(ps[j], ps[i], d);
        CHECK_FALSE((sc.right && sc.left));  // side dichotomy
        // incomparable pairs have height ranges meeting in at most one point
        if (!ij && !ji) {
          std::vector<Point> a = polyline(d, ps[i]);
          std::vector<Point> b = polyline(d, ps[j]);
          Rat lo = std::max(a.front().y, b.front().y);
          Rat hi = std::min(a.back().y, b.back().y);
          CHECK(lo >= hi);
        }
      }
    CHECK(order_closure(ps, d).ok());  // acyclic
  }
  CHECK(pairs_checked >= 300);
}
