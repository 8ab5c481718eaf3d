#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "updp/drawing.hpp"
#include "updp/gadgets.hpp"

namespace updp::detail {

// Construction surface for gadget layouts. Layouts are drawn left to right
// (+x is the flow direction); finish() rotates everything 90° counterclockwise,
// (x, y) -> (-y, x), so each edge with dx > 0 becomes strictly upward.
// Vertex handles double as external ids (insertion order), so drawing indices
// equal sketch handles.
class Sketch {
 public:
  int vertex(const std::string& label, long long x, long long y);
  void edge(int u, int v);
  // u -> bends... -> v with fresh degree-2 vertices at the bends
  void chain(int u, std::span<const std::pair<long long, long long>> bends, int v,
             const std::string& bend_label_prefix);
  void pair(int s, int t);
  int pair_count() const { return static_cast<int>(pairs_.size()); }

  Instance finish() const;
  const std::map<std::string, int>& labels() const { return labels_; }
  std::vector<std::string> label_by_vertex() const;

 private:
  struct V {
    std::string label;
    long long x, y;
  };
  std::vector<V> verts_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::pair<int, int>> pairs_;
  std::map<std::string, int> labels_;
};

// Shared gadget writers (defined in gadgets.cpp). Coordinates are the paper
// frame of the sketch; `prefix` namespaces the labels.
BoxHandles add_routing_box(Sketch& sk, const std::string& prefix, long long cx, long long cy);
CellHandles add_crossing_cell(Sketch& sk, const std::string& prefix, long long ox, long long oy,
                              Drop drop);
void add_box_pairs(Sketch& sk, const CellHandles& c);

}  // namespace updp::detail
