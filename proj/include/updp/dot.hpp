#pragma once

#include <optional>
#include <string>

#include "updp/drawing.hpp"
#include "updp/order.hpp"

namespace updp {

// Graphviz DOT with vertices grouped into same-rank classes by drawing height
// (lowest rank at the bottom). Solution paths, when given, are colored per
// pair index.
std::string export_dot(const Instance& inst, const PathSet* solution = nullptr);

// Hasse diagram of the ≺* closure: one node per path index, edges are the
// transitive reduction.
std::string hasse_dot(const OrderClosure& closure);

}  // namespace updp
