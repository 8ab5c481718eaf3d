#pragma once

#include <string>
#include <vector>

namespace updp {

// CNF over variables 1..nvars; a literal is +v or -v. Clause and literal
// order are preserved exactly as read.
struct Cnf {
  int nvars = 0;
  std::vector<std::vector<int>> clauses;
};

// DIMACS CNF. Throws std::runtime_error on malformed header, a literal out of
// range, or an unterminated clause.
Cnf parse_dimacs(const std::string& text);

// beta[i] in {0,1} is the value of variable i+1.
bool cnf_satisfied(const Cnf& cnf, const std::vector<int>& beta);

// Truth-table satisfiability; guarded to small nvars.
bool cnf_satisfiable(const Cnf& cnf);

}  // namespace updp
