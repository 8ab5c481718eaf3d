#include "sketch.hpp"

#include <stdexcept>

namespace updp::detail {

int Sketch::vertex(const std::string& label, long long x, long long y) {
  int h = static_cast<int>(verts_.size());
  verts_.push_back({label, x, y});
  if (!label.empty() && !labels_.emplace(label, h).second)
    throw std::logic_error("duplicate gadget label: " + label);
  return h;
}

void Sketch::edge(int u, int v) { edges_.emplace_back(u, v); }

void Sketch::chain(int u, std::span<const std::pair<long long, long long>> bends, int v,
                   const std::string& bend_label_prefix) {
  int prev = u;
  int i = 0;
  for (const auto& [x, y] : bends) {
    std::string lbl = bend_label_prefix;
    if (bends.size() > 1) lbl += "." + std::to_string(++i);
    int b = vertex(lbl, x, y);
    edge(prev, b);
    prev = b;
  }
  edge(prev, v);
}

void Sketch::pair(int s, int t) { pairs_.emplace_back(s, t); }

Instance Sketch::finish() const {
  DrawingBuilder db;
  for (size_t h = 0; h < verts_.size(); ++h)
    db.vertex(static_cast<VertexId>(h), Point{Rat(static_cast<long>(-verts_[h].y)),
                                              Rat(static_cast<long>(verts_[h].x))});
  for (const auto& [u, v] : edges_) db.edge(u, v);
  Instance inst;
  inst.drawing = db.build();
  inst.pairs = pairs_;
  return inst;
}

std::vector<std::string> Sketch::label_by_vertex() const {
  std::vector<std::string> out(verts_.size());
  for (size_t h = 0; h < verts_.size(); ++h) out[h] = verts_[h].label;
  return out;
}

}  // namespace updp::detail
