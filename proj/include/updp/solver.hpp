#pragma once

#include <optional>
#include <span>

#include "updp/drawing.hpp"

namespace updp {

enum class SolveStatus { Solved, NoSolution, BudgetExceeded };

const char* to_string(SolveStatus s);

struct SolveStats {
  long long permutations_tried = 0;
  long long rightmost_calls = 0;
  long long oracle_nodes = 0;
};

struct SolveOutcome {
  SolveStatus status = SolveStatus::NoSolution;
  PathSet solution;              // when Solved
  std::vector<int> permutation;  // routing order that succeeded, when Solved
  SolveStats stats;
};

struct SolveOptions {
  bool parallel = false;        // OpenMP permutation search; same result as serial
  int max_k = 10;               // guardrail: k! attempts beyond this are refused
  bool prefix_prune = false;    // experimental: skip permutations sharing a failed routing prefix
};

// Routes the pairs in the given order, each as the rightmost path in the
// residual drawing (all vertices of previously routed paths removed).
// Returns nullopt at the first unroutable pair. The result is index-aligned
// with inst.pairs.
std::optional<PathSet> route_in_order(const Instance& inst, std::span<const int> order,
                                      SolveStats* stats = nullptr);

// Tries routing orders in lexicographic order and reports the first success.
// Complete: a solution is found iff one exists. Throws std::invalid_argument
// when k exceeds opts.max_k.
SolveOutcome solve(const Instance& inst, const SolveOptions& opts = {});

// Checks |ps| == k, endpoints match the pairs, every hop is an edge, paths are
// vertex-simple and pairwise vertex-disjoint.
bool verify_solution(const Instance& inst, const PathSet& ps, Report* violations = nullptr);

// Factorial-number-system unranking of the lexicographically rank-th
// permutation of {0..k-1}.
std::vector<int> unrank_permutation(long long rank, int k);
long long factorial(int k);

}  // namespace updp
