#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "updp/dimacs.hpp"
#include "updp/gadgets.hpp"

namespace updp {

// The generated disjoint-paths instance for a formula, with enough structure
// retained to build witnesses and read assignments back off solutions.
struct ReductionOutput {
  Instance instance;
  std::map<std::string, int> labels;
  std::vector<std::string> vertex_label;
  Cnf cnf;

  int nrows = 0;  // one row of crossing gadgets per variable
  int ncols = 0;  // one column per literal occurrence
  std::vector<int> col_var;     // per column: 0-based variable of its literal
  std::vector<int> col_sign;    // per column: +1 positive, -1 negated
  std::vector<int> col_clause;  // per column: 0-based clause
  std::vector<int> col_lit;     // per column: 0-based position within the clause

  std::vector<std::vector<CellHandles>> cell;  // [row][col]

  // pair indices by role
  std::vector<int> vpair;               // [row]: (V_i, W_{i,1,1})
  std::vector<std::vector<int>> zpair;  // [row][col]: (Z, next W) / (Z, V_i')
  std::vector<std::vector<int>> xypair;
  std::vector<int> cpair;  // [clause]: (C_j, C_j')
  std::vector<std::vector<std::array<std::array<int, 4>, 6>>> boxpair;  // [row][col][box][slot]

  int v_of(const std::string& label) const;
};

// Builds the instance for the formula: a grid of crossing gadgets with one
// row per variable and one column per literal occurrence, clause vertices
// fanned out above the first row and below the last, and one marker edge
// removed per column in the row of the literal's variable (e- for a positive
// literal, e+ for a negated one). Output is validator-clean by construction.
ReductionOutput reduce(const Cnf& cnf);

// Explicit solution assembled from a satisfying assignment: per row the
// unique H- or L-side chain per beta, per clause a top-to-bottom path through
// the column of one satisfied literal. nullopt when beta does not satisfy the
// formula. The result passes verify_solution.
std::optional<PathSet> witness_from_assignment(const ReductionOutput& out,
                                               const std::vector<int>& beta);

// beta(V_i) = 1 iff the path of pair (V_i, W_{i,1,1}) enters through H^in.
// Throws std::logic_error when that path avoids both entries.
std::vector<int> assignment_from_solution(const ReductionOutput& out, const PathSet& ps);

// Rebuilds the reduction view from an instance plus its labels sidecar. The
// formula is recovered from the missing marker edges (exactly one per
// column).
ReductionOutput reconstruct_reduction(Instance inst, std::map<std::string, int> labels);

// Sidecar format: one "<structured-name> <vertex-id>" line per labeled vertex.
std::string serialize_labels(const std::map<std::string, int>& labels);
std::map<std::string, int> parse_labels(const std::string& text);

}  // namespace updp
