#include <algorithm>

#include "doctest.h"
#include "support.hpp"
#include "updp/instance_io.hpp"
#include "updp/oracle.hpp"
#include "updp/solver.hpp"

using namespace updp;

namespace {

Drawing diamond_chain(int links) {
  DrawingBuilder db;
  // each link: bottom -> {left,right} -> top, stacked
  long long next = 0;
  auto add = [&](long long x, long long y) {
    db.vertex(next, Point{Rat(x), Rat(y)});
    return next++;
  };
  long long bottom = add(0, 0);
  for (int i = 0; i < links; ++i) {
    long long l = add(-1, 3 * i + 1), r = add(1, 3 * i + 1), top = add(0, 3 * i + 3);
    db.edge(bottom, l);
    db.edge(bottom, r);
    db.edge(l, top);
    db.edge(r, top);
    bottom = top;
  }
  return db.build();
}

}  // namespace

TEST_CASE("path enumeration on diamonds") {
  Drawing one = diamond_chain(1);
  CHECK(enumerate_st_paths(one, 0, 3, 100).paths.size() == 2);
  Drawing edgeless = parse_instance("v 0 0 0\nv 1 0 1\n").drawing;
  CHECK(enumerate_st_paths(edgeless, 0, 1, 100).paths.empty());
  Drawing three = diamond_chain(3);
  CHECK(enumerate_st_paths(three, 0, three.n() - 1, 100).paths.size() == 8);
  EnumResult trunc = enumerate_st_paths(three, 0, three.n() - 1, 5);
  CHECK(trunc.truncated);
  CHECK(trunc.paths.size() == 5);
}

TEST_CASE("rightmost by definition is unique when any path exists") {
  Drawing one = diamond_chain(1);
  std::optional<Path> p = rightmost_by_definition(one, 0, 3);
  REQUIRE(p.has_value());
  CHECK(p->v == std::vector<int>{0, 2, 3});  // via the right vertex
  CHECK_FALSE(rightmost_by_definition(one, 1, 2).has_value());

  testsupport::Rng rng(17);
  for (int iter = 0; iter < 200; ++iter) {
    Drawing d = testsupport::random_drawing(rng, 10, 14);
    for (int s = 0; s < d.n(); ++s)
      for (int t = 0; t < d.n(); ++t)
        if (s != t) (void)rightmost_by_definition(d, s, t);  // throws on 0/2+ qualifiers
  }
}

TEST_CASE("exact solver on tiny fixed instances") {
  Instance inst = parse_instance(
      "v 0 0 0\nv 1 1 1\nv 2 -1 1\nv 3 0 2\ne 0 1\ne 0 2\ne 1 3\ne 2 3\np 0 3\n");
  SolveOutcome so = exact_solve(inst);
  REQUIRE(so.status == SolveStatus::Solved);
  CHECK(verify_solution(inst, so.solution));

  // bowtie: both pairs must pass the middle vertex
  Instance bow = parse_instance(
      "v 0 0 0\nv 1 2 0\nv 2 1 1\nv 3 2 2\nv 4 0 2\n"
      "e 0 2\ne 1 2\ne 2 3\ne 2 4\np 0 3\np 1 4\n");
  CHECK(exact_solve(bow).status == SolveStatus::NoSolution);
}

TEST_CASE("exact solver status is independent of pair order") {
  testsupport::Rng rng(31);
  for (int iter = 0; iter < 150; ++iter) {
    Drawing d = testsupport::random_drawing(rng, 7, 9);
    Instance inst = testsupport::random_instance(rng, std::move(d), 3);
    SolveOutcome base = exact_solve(inst);
    Instance shuffled = inst;
    std::shuffle(shuffled.pairs.begin(), shuffled.pairs.end(), rng);
    CHECK(exact_solve(shuffled).status == base.status);
    if (base.status == SolveStatus::Solved) CHECK(verify_solution(inst, base.solution));
  }
}

TEST_CASE("budget exhaustion is reported, never misread as unsolvable") {
  Instance big = testsupport::reversal_lattice(3, 8, 16);
  SolveOutcome full = exact_solve(big);
  REQUIRE(full.status == SolveStatus::NoSolution);
  SolveOutcome tiny = exact_solve(big, {50});
  CHECK(tiny.status == SolveStatus::BudgetExceeded);
  CHECK(tiny.stats.oracle_nodes <= 51);
}

TEST_CASE("solution counting with and without projection") {
  Drawing two = diamond_chain(2);
  Instance inst;
  inst.drawing = two;
  inst.pairs = {{0, two.n() - 1}};
  CountResult whole = count_solutions(inst, 100, 0);
  CHECK(whole.distinct == 4);
  CHECK(whole.raw_solutions == 4);

  // two independent diamonds, one pair each: 2x2 solutions, 2 projections
  Instance multi = parse_instance(
      "v 0 0 0\nv 1 1 1\nv 2 -1 1\nv 3 0 2\n"
      "v 10 10 0\nv 11 11 1\nv 12 9 1\nv 13 10 2\n"
      "e 0 1\ne 0 2\ne 1 3\ne 2 3\n"
      "e 10 11\ne 10 12\ne 11 13\ne 12 13\n"
      "p 0 3\np 10 13\n");
  CHECK(count_solutions(multi, 100, 0).distinct == 4);
  CHECK(count_solutions(multi, 100, 1).distinct == 2);
  CountResult capped = count_solutions(multi, 3, 0);
  CHECK(capped.distinct == 3);
}
