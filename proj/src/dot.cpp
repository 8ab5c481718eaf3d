#include "updp/dot.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace updp {

std::string export_dot(const Instance& inst, const PathSet* solution) {
  const Drawing& d = inst.drawing;
  static const char* kColors[] = {"red",    "blue",   "forestgreen", "darkorange",
                                  "purple", "brown",  "deeppink",    "teal",
                                  "gold3",  "navy"};
  std::map<std::pair<int, int>, int> edge_color;  // edge -> pair index
  if (solution) {
    for (size_t i = 0; i < solution->size(); ++i) {
      const auto& v = (*solution)[i].v;
      for (size_t j = 0; j + 1 < v.size(); ++j)
        edge_color[{v[j], v[j + 1]}] = static_cast<int>(i);
    }
  }

  std::ostringstream os;
  os << "digraph updp {\n  rankdir=BT;\n  node [shape=circle, fontsize=10];\n";

  // group vertices of equal height into one rank
  std::map<Rat, std::vector<int>> levels;
  for (int v = 0; v < d.n(); ++v) levels[d.pt[v].y].push_back(v);
  for (const auto& [y, vs] : levels) {
    os << "  { rank=same;";
    for (int v : vs) os << " n" << d.id[v] << ';';
    os << " }\n";
  }
  for (int v = 0; v < d.n(); ++v)
    os << "  n" << d.id[v] << " [label=\"" << d.id[v] << "\", pos=\"" << d.pt[v].x.get_d() << ','
       << d.pt[v].y.get_d() << "!\"];\n";
  for (const auto& [u, v] : d.edges) {
    os << "  n" << d.id[u] << " -> n" << d.id[v];
    auto it = edge_color.find({u, v});
    if (it != edge_color.end())
      os << " [color=" << kColors[it->second % 10] << ", penwidth=2]";
    os << ";\n";
  }
  for (size_t i = 0; i < inst.pairs.size(); ++i) {
    os << "  n" << d.id[inst.pairs[i].first] << " [shape=doublecircle];\n";
    os << "  n" << d.id[inst.pairs[i].second] << " [shape=doublecircle];\n";
  }
  os << "}\n";
  return os.str();
}

std::string hasse_dot(const OrderClosure& c) {
  std::ostringstream os;
  os << "digraph hasse {\n  rankdir=LR;\n";
  for (int i = 0; i < c.size; ++i) os << "  p" << i << " [label=\"P" << i << "\"];\n";
  // transitive reduction: drop (i,j) when some i -> x -> j exists in the closure
  for (const auto& [i, j] : c.related) {
    bool implied = false;
    for (int x = 0; x < c.size && !implied; ++x)
      if (x != i && x != j && c.rel(i, x) && c.rel(x, j)) implied = true;
    if (!implied) os << "  p" << i << " -> p" << j << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace updp
