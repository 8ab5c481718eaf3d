#pragma once

#include <vector>

#include "updp/drawing.hpp"

namespace updp {

// q ≺ p: some point of p lies strictly right of q at a common height.
// Evaluated exactly at all critical heights (polyline vertex heights of both
// paths clipped to the common y-range) plus the midpoints between consecutive
// ones; between two critical heights the horizontal order of two disjoint
// y-monotone polylines cannot change without a crossing.
bool precedes(const Path& q, const Path& p, const Drawing& d);

// Which sides of `base` the path `probe` touches (strictly), over the common
// y-range.
struct SideContact {
  bool right = false;
  bool left = false;
};
SideContact side_contacts(const Path& probe, const Path& base, const Drawing& d);

struct OrderClosure {
  int size = 0;
  std::vector<std::pair<int, int>> related;  // (i, j) with i ≺* j, sorted
  std::vector<int> cycle;                    // nonempty = witness of a ≺ cycle
  bool ok() const { return cycle.empty(); }
  bool rel(int i, int j) const;
};

// Transitive closure of ≺ over a pairwise vertex-disjoint path set. A cycle
// can only arise from invalid input (non-disjoint paths or a broken drawing);
// it is reported, not thrown.
OrderClosure order_closure(const PathSet& ps, const Drawing& d);

// Indices with no ≺*-successor. Requires an acyclic closure.
std::vector<int> maximal_elements(const OrderClosure& c);
std::vector<int> maximal_elements(const PathSet& ps, const Drawing& d);

}  // namespace updp
