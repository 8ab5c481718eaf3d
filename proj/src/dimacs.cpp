#include "updp/dimacs.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace updp {

Cnf parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  Cnf cnf;
  int nclauses = -1;
  bool have_header = false;
  std::vector<int> clause;
  bool in_clause = false;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "c") continue;
    if (tok == "p") {
      std::string fmt;
      if (have_header || !(ls >> fmt >> cnf.nvars >> nclauses) || fmt != "cnf" || cnf.nvars < 0 ||
          nclauses < 0)
        throw std::runtime_error("malformed DIMACS header");
      have_header = true;
      continue;
    }
    if (!have_header) throw std::runtime_error("clause before DIMACS header");
    ls.clear();
    ls.str(line);
    long long lit;
    while (ls >> lit) {
      if (lit == 0) {
        if (clause.empty()) throw std::runtime_error("empty clause");
        cnf.clauses.push_back(clause);
        clause.clear();
        in_clause = false;
      } else {
        if (std::abs(lit) > cnf.nvars)
          throw std::runtime_error("literal " + std::to_string(lit) + " out of range");
        clause.push_back(static_cast<int>(lit));
        in_clause = true;
      }
    }
    if (!ls.eof()) throw std::runtime_error("bad token in clause line: " + line);
  }
  if (in_clause) throw std::runtime_error("unterminated clause");
  if (nclauses >= 0 && static_cast<int>(cnf.clauses.size()) != nclauses)
    throw std::runtime_error("header announces " + std::to_string(nclauses) + " clauses, found " +
                             std::to_string(cnf.clauses.size()));
  return cnf;
}

bool cnf_satisfied(const Cnf& cnf, const std::vector<int>& beta) {
  for (const auto& clause : cnf.clauses) {
    bool sat = false;
    for (int lit : clause) {
      int v = std::abs(lit) - 1;
      int val = beta.at(v);
      if ((lit > 0 && val) || (lit < 0 && !val)) {
        sat = true;
        break;
      }
    }
    if (!sat) return false;
  }
  return true;
}

bool cnf_satisfiable(const Cnf& cnf) {
  if (cnf.nvars > 24) throw std::invalid_argument("truth table restricted to <= 24 variables");
  for (long long mask = 0; mask < (1LL << cnf.nvars); ++mask) {
    std::vector<int> beta(cnf.nvars);
    for (int i = 0; i < cnf.nvars; ++i) beta[i] = (mask >> i) & 1;
    if (cnf_satisfied(cnf, beta)) return true;
  }
  return false;
}

}  // namespace updp
