#pragma once

#include <string>
#include <vector>

#include "updp/oracle.hpp"

namespace updp {

struct CertCheck {
  std::string name;
  bool pass = false;
  std::string detail;
  long long nodes = 0;  // oracle nodes spent
};

// Exhaustive oracle certification of the gadget properties the reduction
// relies on: the routing gadget's through-traffic discipline, the crossing
// gadget's two canonical routings (against frozen traversal lists), row
// chaining, and column marker-edge usage.
std::vector<CertCheck> run_certification(const SearchBudget& budget = {});

bool all_pass(const std::vector<CertCheck>& checks);

}  // namespace updp
