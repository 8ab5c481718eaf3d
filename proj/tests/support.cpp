#include "support.hpp"

#include <algorithm>
#include <set>

namespace updp::testsupport {

Drawing random_drawing(Rng& rng, int n, int edge_target) {
  std::uniform_int_distribution<int> xd(-4, 4), yd(0, std::max(2, n / 2 + 2));
  std::set<std::pair<int, int>> used;
  std::vector<Point> pts;
  while (static_cast<int>(pts.size()) < n) {
    int x = xd(rng), y = yd(rng);
    if (!used.insert({x, y}).second) continue;
    pts.push_back(Point{Rat(x), Rat(y)});
  }
  DrawingBuilder db;
  for (int v = 0; v < n; ++v) db.vertex(v, pts[v]);

  std::vector<std::pair<int, int>> candidates;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (pts[u].y < pts[v].y) candidates.emplace_back(u, v);
  std::shuffle(candidates.begin(), candidates.end(), rng);

  std::vector<Segment> accepted;
  int m = 0;
  for (const auto& [u, v] : candidates) {
    if (m >= edge_target) break;
    Segment s{pts[u], pts[v]};
    bool ok = true;
    for (const Segment& t : accepted)
      if (segments_properly_cross(s, t)) ok = false;
    for (int w = 0; ok && w < n; ++w)
      if (w != u && w != v && point_on_segment(pts[w], s)) ok = false;
    if (!ok) continue;
    accepted.push_back(s);
    db.edge(u, v);
    ++m;
  }
  return db.build();
}

Instance random_instance(Rng& rng, Drawing d, int k) {
  std::vector<int> verts(d.n());
  for (int v = 0; v < d.n(); ++v) verts[v] = v;
  std::shuffle(verts.begin(), verts.end(), rng);
  Instance inst;
  inst.drawing = std::move(d);
  for (int i = 0; i < k; ++i) inst.pairs.emplace_back(verts[2 * i], verts[2 * i + 1]);
  return inst;
}

std::vector<Drawing> all_drawings_on_template(const std::vector<int>& xs) {
  const int n = static_cast<int>(xs.size());
  std::vector<std::pair<int, int>> candidates;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) candidates.emplace_back(u, v);  // y(u) = u < v = y(v)
  std::vector<Drawing> out;
  for (unsigned mask = 0; mask < (1u << candidates.size()); ++mask) {
    DrawingBuilder db;
    for (int v = 0; v < n; ++v) db.vertex(v, Point{Rat(xs[v]), Rat(v)});
    for (size_t e = 0; e < candidates.size(); ++e)
      if (mask & (1u << e)) db.edge(candidates[e].first, candidates[e].second);
    Drawing d = db.build();
    if (validate_drawing(d).ok()) out.push_back(std::move(d));
  }
  return out;
}

Instance reversal_lattice(int k, int width, int height) {
  DrawingBuilder db;
  auto id = [width](int r, int c) { return static_cast<VertexId>(r * width + c); };
  for (int r = 0; r < height; ++r)
    for (int c = 0; c < width; ++c)
      db.vertex(id(r, c), Point{Rat(2 * c + (r & 1)), Rat(r)});
  for (int r = 0; r + 1 < height; ++r)
    for (int c = 0; c < width; ++c) {
      if (r & 1) {
        db.edge(id(r, c), id(r + 1, c));
        if (c + 1 < width) db.edge(id(r, c), id(r + 1, c + 1));
      } else {
        db.edge(id(r, c), id(r + 1, c));
        if (c > 0) db.edge(id(r, c), id(r + 1, c - 1));
      }
    }
  Drawing d = db.build();
  Instance inst;
  for (int i = 0; i < k; ++i) {
    int sc = 1 + i, tc = 1 + (k - 1 - i);
    inst.pairs.emplace_back(d.index_of(id(0, sc)), d.index_of(id(height - 1, tc)));
  }
  inst.drawing = std::move(d);
  return inst;
}

}  // namespace updp::testsupport
