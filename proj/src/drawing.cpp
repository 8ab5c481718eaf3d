#include "updp/drawing.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace updp {

int Drawing::index_of(VertexId v) const {
  auto it = std::lower_bound(id.begin(), id.end(), v);
  if (it == id.end() || *it != v) return -1;
  return static_cast<int>(it - id.begin());
}

bool Drawing::has_edge(int u, int v) const {
  return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
}

void DrawingBuilder::vertex(VertexId v, Point p) {
  for (const auto& [w, q] : verts_)
    if (w == v) throw std::invalid_argument("duplicate vertex id " + std::to_string(v));
  verts_.emplace_back(v, std::move(p));
}

void DrawingBuilder::edge(VertexId u, VertexId v) { edges_.emplace_back(u, v); }

namespace {

// Ascending direction angle from the positive x-axis, i.e. rightmost first for
// upward edges. Total for arbitrary directions so invalid drawings can still
// be built and then reported by the validator.
struct AngleLess {
  const Drawing& d;
  int from;
  bool operator()(int a, int b) const {
    Rat ax = d.pt[a].x - d.pt[from].x, ay = d.pt[a].y - d.pt[from].y;
    Rat bx = d.pt[b].x - d.pt[from].x, by = d.pt[b].y - d.pt[from].y;
    auto half = [](const Rat& x, const Rat& y) {
      return (sgn(y) < 0 || (sgn(y) == 0 && sgn(x) < 0)) ? 1 : 0;
    };
    int ha = half(ax, ay), hb = half(bx, by);
    if (ha != hb) return ha < hb;
    Rat cross = ax * by - ay * bx;
    return sgn(cross) > 0;
  }
};

}  // namespace

Drawing DrawingBuilder::build() const {
  Drawing d;
  std::vector<std::pair<VertexId, Point>> vs = verts_;
  std::sort(vs.begin(), vs.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  d.id.reserve(vs.size());
  d.pt.reserve(vs.size());
  for (auto& [v, p] : vs) {
    d.id.push_back(v);
    d.pt.push_back(std::move(p));
  }
  std::vector<std::pair<int, int>> es;
  es.reserve(edges_.size());
  for (const auto& [u, v] : edges_) {
    int iu = d.index_of(u), iv = d.index_of(v);
    if (iu < 0) throw std::invalid_argument("edge references undeclared vertex " + std::to_string(u));
    if (iv < 0) throw std::invalid_argument("edge references undeclared vertex " + std::to_string(v));
    es.emplace_back(iu, iv);
  }
  std::sort(es.begin(), es.end());
  es.erase(std::unique(es.begin(), es.end()), es.end());
  d.edges = std::move(es);
  d.out.assign(d.n(), {});
  d.in.assign(d.n(), {});
  for (const auto& [u, v] : d.edges) {
    d.out[u].push_back(v);
    d.in[v].push_back(u);
  }
  for (int v = 0; v < d.n(); ++v)
    std::sort(d.out[v].begin(), d.out[v].end(), AngleLess{d, v});
  return d;
}

std::string Report::to_string() const {
  std::ostringstream os;
  for (const auto& v : violations) os << v.what << '\n';
  return os.str();
}

namespace {

struct Box {
  double xlo, xhi, ylo, yhi;
};

// Conservative double bounding box: the padding absorbs rounding, so exact
// overlaps never slip past the prefilter.
Box box_of(const Point& a, const Point& b) {
  double x1 = a.x.get_d(), x2 = b.x.get_d();
  double y1 = a.y.get_d(), y2 = b.y.get_d();
  auto pad = [](double v) { return std::max(1.0, std::abs(v)) * 1e-9; };
  Box r{std::min(x1, x2), std::max(x1, x2), std::min(y1, y2), std::max(y1, y2)};
  r.xlo -= pad(r.xlo);
  r.xhi += pad(r.xhi);
  r.ylo -= pad(r.ylo);
  r.yhi += pad(r.yhi);
  return r;
}

bool boxes_meet(const Box& a, const Box& b) {
  return a.xlo <= b.xhi && b.xlo <= a.xhi && a.ylo <= b.yhi && b.ylo <= a.yhi;
}

std::string edge_str(const Drawing& d, size_t e) {
  return std::to_string(d.id[d.edges[e].first]) + "->" + std::to_string(d.id[d.edges[e].second]);
}

bool is_acyclic(const Drawing& d) {
  std::vector<int> indeg(d.n(), 0);
  for (const auto& [u, v] : d.edges) {
    (void)u;
    ++indeg[v];
  }
  std::queue<int> q;
  for (int v = 0; v < d.n(); ++v)
    if (indeg[v] == 0) q.push(v);
  int seen = 0;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    ++seen;
    for (int w : d.out[v])
      if (--indeg[w] == 0) q.push(w);
  }
  return seen == d.n();
}

}  // namespace

Report validate_drawing(const Drawing& d, bool parallel) {
  Report rep;
  auto add = [&rep](std::string s) { rep.violations.push_back({std::move(s)}); };

  // distinct coordinates
  {
    std::vector<int> order(d.n());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      if (d.pt[a].x != d.pt[b].x) return d.pt[a].x < d.pt[b].x;
      return d.pt[a].y < d.pt[b].y;
    });
    for (int i = 0; i + 1 < d.n(); ++i)
      if (d.pt[order[i]] == d.pt[order[i + 1]])
        add("coincident vertices " + std::to_string(d.id[order[i]]) + " and " +
            std::to_string(d.id[order[i + 1]]));
  }

  // strictly upward edges
  for (size_t e = 0; e < d.edges.size(); ++e) {
    const auto& [u, v] = d.edges[e];
    if (u == v) {
      add("self loop at vertex " + std::to_string(d.id[u]));
      continue;
    }
    if (!(d.pt[u].y < d.pt[v].y))
      add("non-upward edge " + edge_str(d, e));
  }

  const size_t m = d.edges.size();
  std::vector<Segment> seg(m);
  std::vector<Box> ebox(m);
  for (size_t e = 0; e < m; ++e) {
    seg[e] = {d.pt[d.edges[e].first], d.pt[d.edges[e].second]};
    ebox[e] = box_of(seg[e].a, seg[e].b);
  }

  // properly crossing edge pairs
  std::vector<std::pair<size_t, size_t>> crossings;
#pragma omp parallel if (parallel)
  {
    std::vector<std::pair<size_t, size_t>> local;
#pragma omp for schedule(dynamic, 16) nowait
    for (long long ei = 0; ei < static_cast<long long>(m); ++ei) {
      size_t e = static_cast<size_t>(ei);
      if (d.edges[e].first == d.edges[e].second) continue;
      for (size_t f = e + 1; f < m; ++f) {
        if (d.edges[f].first == d.edges[f].second) continue;
        if (!boxes_meet(ebox[e], ebox[f])) continue;
        if (segments_properly_cross(seg[e], seg[f])) local.emplace_back(e, f);
      }
    }
#pragma omp critical
    crossings.insert(crossings.end(), local.begin(), local.end());
  }
  std::sort(crossings.begin(), crossings.end());
  for (const auto& [e, f] : crossings)
    add("edge " + edge_str(d, e) + " crosses edge " + edge_str(d, f));

  // vertex in the interior of an edge
  std::vector<std::pair<int, size_t>> hits;
#pragma omp parallel if (parallel)
  {
    std::vector<std::pair<int, size_t>> local;
#pragma omp for schedule(dynamic, 64) nowait
    for (int v = 0; v < d.n(); ++v) {
      Box vb = box_of(d.pt[v], d.pt[v]);
      for (size_t e = 0; e < m; ++e) {
        const auto& [a, b] = d.edges[e];
        if (a == v || b == v || a == b) continue;
        if (!boxes_meet(vb, ebox[e])) continue;
        if (point_on_segment(d.pt[v], seg[e])) local.emplace_back(v, e);
      }
    }
#pragma omp critical
    hits.insert(hits.end(), local.begin(), local.end());
  }
  std::sort(hits.begin(), hits.end());
  for (const auto& [v, e] : hits)
    add("vertex " + std::to_string(d.id[v]) + " lies on edge " + edge_str(d, e));

  if (!is_acyclic(d)) add("directed cycle present");

  return rep;
}

Report validate_instance(const Instance& inst) {
  Report rep;
  auto add = [&rep](std::string s) { rep.violations.push_back({std::move(s)}); };
  if (inst.pairs.empty()) add("no terminal pairs");
  std::vector<int> seen;
  for (size_t i = 0; i < inst.pairs.size(); ++i) {
    auto [s, t] = inst.pairs[i];
    if (s < 0 || s >= inst.drawing.n() || t < 0 || t >= inst.drawing.n()) {
      add("pair " + std::to_string(i) + " references an unknown vertex");
      continue;
    }
    if (s == t)
      add("pair " + std::to_string(i) + " has coincident terminals (vertex " +
          std::to_string(inst.drawing.id[s]) + ")");
    seen.push_back(s);
    seen.push_back(t);
  }
  std::sort(seen.begin(), seen.end());
  for (size_t i = 0; i + 1 < seen.size(); ++i)
    if (seen[i] == seen[i + 1] && (i == 0 || seen[i] != seen[i - 1]))
      add("terminal vertex " + std::to_string(inst.drawing.id[seen[i]]) +
          " used by more than one terminal");
  return rep;
}

std::vector<Point> polyline(const Drawing& d, const Path& p) {
  std::vector<Point> pts;
  pts.reserve(p.v.size());
  for (int v : p.v) pts.push_back(d.pt[v]);
  return pts;
}

}  // namespace updp
