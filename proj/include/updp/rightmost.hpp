#pragma once

#include <optional>

#include "updp/drawing.hpp"

namespace updp {

// Liveness mask for residual drawings; nullptr means all vertices alive.
using Alive = const std::vector<char>*;

// Vertices reachable from s by directed paths, s included.
std::vector<char> reachable_from(const Drawing& d, int s, Alive alive = nullptr);

// Vertices from which t is reachable, t included.
std::vector<char> reaches_to(const Drawing& d, int t, Alive alive = nullptr);

// Among the out-neighbors of v inside `allowed`, the one whose edge leaves at
// the smallest direction angle from the positive x-axis.
std::optional<int> rightmost_successor(const Drawing& d, int v, const std::vector<char>& allowed);

// The unique rightmost s-t path, or nullopt when t is unreachable from s.
// Runs in O(n + m): two sweeps plus a greedy walk that always takes the
// rightmost successor still able to reach t.
std::optional<Path> rightmost_path(const Drawing& d, int s, int t, Alive alive = nullptr);

}  // namespace updp
