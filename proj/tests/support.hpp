#pragma once

#include <random>
#include <vector>

#include "updp/drawing.hpp"

namespace updp::testsupport {

using Rng = std::mt19937_64;

// Random valid drawing: n vertices on a small integer grid (distinct points,
// shared heights allowed), edges added greedily while the drawing stays
// planar. Always validator-clean.
Drawing random_drawing(Rng& rng, int n, int edge_target);

// Random instance over a drawing: k pairs with 2k distinct terminals.
// Reachability is not guaranteed.
Instance random_instance(Rng& rng, Drawing d, int k);

// All valid drawings over one 5-point coordinate template (y = 0..4, x given),
// i.e. every subset of the 10 upward edge candidates that draws planar.
std::vector<Drawing> all_drawings_on_template(const std::vector<int>& xs);

// Triangular lattice with k source/target pairs in fully reversed order: any
// two pairs must cross, so there is no solution for k >= 2, every terminal is
// reachable, and the permutation solver visits all k! orders. width/height
// control the vertex count.
Instance reversal_lattice(int k, int width, int height);

}  // namespace updp::testsupport
