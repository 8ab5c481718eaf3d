#pragma once

#include <optional>

#include "updp/solver.hpp"

namespace updp {

// Exact exponential-time reference solvers. Deliberately naive-but-exact;
// used to certify the fast path at desk scale.

struct SearchBudget {
  long long max_nodes = 10'000'000;  // search-tree nodes (path extension steps)
};

struct EnumResult {
  std::vector<Path> paths;
  bool truncated = false;
};

// All simple s-t paths in DFS order (successors visited rightmost first),
// truncated at `limit`.
EnumResult enumerate_st_paths(const Drawing& d, int s, int t, size_t limit);

// The enumerated s-t path P with P ⊆ P' ∪ Right(P') for every other
// enumerated path P'; nullopt when no s-t path exists. Throws
// std::logic_error when zero or two or more paths qualify, or when the
// enumeration limit is hit.
std::optional<Path> rightmost_by_definition(const Drawing& d, int s, int t,
                                            size_t enum_limit = 200000);

// Backtracking over the pairs in input order: for each pair every simple path
// avoiding used vertices is tried, with reachability pruning (a partial path
// is abandoned when its head can no longer reach the target, and a completed
// path when some later pair loses s-t connectivity). Exact when the budget is
// not exhausted; BUDGET_EXCEEDED is never a NO_SOLUTION.
SolveOutcome exact_solve(const Instance& inst, const SearchBudget& budget = {});

// Solution counting for uniqueness certification. Continues the search after
// each solution and counts distinct ones, where two solutions are identified
// when they agree on the first `project_prefix` pairs (0 = full solutions).
// Stops once `cap` distinct solutions were seen.
struct CountResult {
  SolveStatus status = SolveStatus::NoSolution;
  long long distinct = 0;
  long long raw_solutions = 0;
  long long nodes_used = 0;
  std::vector<PathSet> witnesses;  // one full solution per distinct class
};
CountResult count_solutions(const Instance& inst, size_t cap, size_t project_prefix = 0,
                            const SearchBudget& budget = {});

}  // namespace updp
