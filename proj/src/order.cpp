#include "updp/order.hpp"

#include <algorithm>
#include <stdexcept>

namespace updp {

namespace {

// Heights at which the horizontal order of the two polylines can change,
// plus midpoints between consecutive ones.
std::vector<Rat> sample_heights(std::span<const Point> a, std::span<const Point> b) {
  Rat lo = std::max(a.front().y, b.front().y);
  Rat hi = std::min(a.back().y, b.back().y);
  if (lo > hi) return {};
  std::vector<Rat> ys{lo, hi};
  for (const Point& p : a)
    if (lo <= p.y && p.y <= hi) ys.push_back(p.y);
  for (const Point& p : b)
    if (lo <= p.y && p.y <= hi) ys.push_back(p.y);
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
  std::vector<Rat> out;
  out.reserve(2 * ys.size());
  for (size_t i = 0; i < ys.size(); ++i) {
    out.push_back(ys[i]);
    if (i + 1 < ys.size()) out.push_back((ys[i] + ys[i + 1]) / 2);
  }
  return out;
}

SideContact contacts(std::span<const Point> probe, std::span<const Point> base) {
  SideContact c;
  for (const Rat& y : sample_heights(probe, base)) {
    Rat xp = horizontal_crossings(probe, y)[0];
    Rat xb = horizontal_crossings(base, y)[0];
    if (xp > xb) c.right = true;
    if (xp < xb) c.left = true;
  }
  return c;
}

}  // namespace

bool precedes(const Path& q, const Path& p, const Drawing& d) {
  std::vector<Point> pq = polyline(d, q);
  std::vector<Point> pp = polyline(d, p);
  return contacts(pp, pq).right;
}

SideContact side_contacts(const Path& probe, const Path& base, const Drawing& d) {
  std::vector<Point> a = polyline(d, probe);
  std::vector<Point> b = polyline(d, base);
  return contacts(a, b);
}

bool OrderClosure::rel(int i, int j) const {
  return std::binary_search(related.begin(), related.end(), std::make_pair(i, j));
}

OrderClosure order_closure(const PathSet& ps, const Drawing& d) {
  const int k = static_cast<int>(ps.size());
  OrderClosure c;
  c.size = k;
  std::vector<std::vector<char>> direct(k, std::vector<char>(k, 0));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (i != j) direct[i][j] = precedes(ps[i], ps[j], d);

  // closure by DFS from each node
  std::vector<std::vector<char>> reach(k, std::vector<char>(k, 0));
  for (int s = 0; s < k; ++s) {
    std::vector<int> stack{s};
    std::vector<char> vis(k, 0);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w = 0; w < k; ++w)
        if (direct[v][w] && !vis[w]) {
          vis[w] = 1;
          stack.push_back(w);
        }
    }
    reach[s] = vis;
  }
  for (int i = 0; i < k; ++i) {
    if (reach[i][i]) {
      // reconstruct one cycle through i as the witness
      std::vector<int> seq{i};
      int v = i;
      do {
        for (int w = 0; w < k; ++w)
          if (direct[v][w] && reach[w][i]) {
            v = w;
            break;
          }
        seq.push_back(v);
      } while (v != i);
      c.cycle = seq;
      return c;
    }
    for (int j = 0; j < k; ++j)
      if (reach[i][j]) c.related.emplace_back(i, j);
  }
  std::sort(c.related.begin(), c.related.end());
  return c;
}

std::vector<int> maximal_elements(const OrderClosure& c) {
  if (!c.ok()) throw std::invalid_argument("order closure has a cycle");
  std::vector<char> has_succ(c.size, 0);
  for (const auto& [i, j] : c.related) {
    (void)j;
    has_succ[i] = 1;
  }
  std::vector<int> out;
  for (int i = 0; i < c.size; ++i)
    if (!has_succ[i]) out.push_back(i);
  return out;
}

std::vector<int> maximal_elements(const PathSet& ps, const Drawing& d) {
  return maximal_elements(order_closure(ps, d));
}

}  // namespace updp
