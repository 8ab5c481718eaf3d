#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "updp/geometry.hpp"

namespace updp {

// External vertex id as it appears in instance files. Internally vertices are
// addressed by their dense index (the rank of the id in ascending order).
using VertexId = long long;

struct Drawing {
  std::vector<VertexId> id;   // ascending; position = internal vertex index
  std::vector<Point> pt;      // indexed like id
  std::vector<std::pair<int, int>> edges;  // internal indices, sorted
  std::vector<std::vector<int>> out;       // rightmost successor first
  std::vector<std::vector<int>> in;

  int n() const { return static_cast<int>(id.size()); }
  size_t m() const { return edges.size(); }
  int index_of(VertexId v) const;          // -1 when absent
  bool has_edge(int u, int v) const;
};

class DrawingBuilder {
 public:
  // Throws std::invalid_argument on duplicate id.
  void vertex(VertexId v, Point p);
  void edge(VertexId u, VertexId v);
  // Throws std::invalid_argument when an edge references an undeclared vertex.
  Drawing build() const;

 private:
  std::vector<std::pair<VertexId, Point>> verts_;
  std::vector<std::pair<VertexId, VertexId>> edges_;
};

struct Violation {
  std::string what;
};

struct Report {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string to_string() const;
};

// Checks all drawing invariants: pairwise distinct coordinates, strictly
// upward edges, no properly crossing edge pair, no vertex in the interior of
// an edge, acyclicity. Violations are data, not errors. The crossing scan is
// quadratic; `parallel` runs it with OpenMP and yields the identical report.
Report validate_drawing(const Drawing& d, bool parallel = false);

struct Instance {
  Drawing drawing;
  std::vector<std::pair<int, int>> pairs;  // internal indices; order is the pair index
};

// Terminals pairwise distinct, s != t, k >= 1. Assumes the drawing is valid.
Report validate_instance(const Instance& inst);

struct Path {
  std::vector<int> v;
  bool operator==(const Path& o) const { return v == o.v; }
};
using PathSet = std::vector<Path>;

std::vector<Point> polyline(const Drawing& d, const Path& p);

}  // namespace updp
