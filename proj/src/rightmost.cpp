#include "updp/rightmost.hpp"

#include <stdexcept>

namespace updp {

namespace {

std::vector<char> sweep(const Drawing& d, int start, const std::vector<std::vector<int>>& adj,
                        Alive alive) {
  std::vector<char> vis(d.n(), 0);
  if (alive && !(*alive)[start]) return vis;
  std::vector<int> stack{start};
  vis[start] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v]) {
      if (vis[w] || (alive && !(*alive)[w])) continue;
      vis[w] = 1;
      stack.push_back(w);
    }
  }
  return vis;
}

}  // namespace

std::vector<char> reachable_from(const Drawing& d, int s, Alive alive) {
  return sweep(d, s, d.out, alive);
}

std::vector<char> reaches_to(const Drawing& d, int t, Alive alive) {
  return sweep(d, t, d.in, alive);
}

std::optional<int> rightmost_successor(const Drawing& d, int v, const std::vector<char>& allowed) {
  for (int w : d.out[v])
    if (allowed[w]) return w;
  return std::nullopt;
}

std::optional<Path> rightmost_path(const Drawing& d, int s, int t, Alive alive) {
  if (s == t) throw std::invalid_argument("rightmost_path requires s != t");
  std::vector<char> from_s = reachable_from(d, s, alive);
  if (!from_s[t]) return std::nullopt;
  std::vector<char> to_t = reaches_to(d, t, alive);
  std::vector<char> allowed(d.n(), 0);
  for (int v = 0; v < d.n(); ++v) allowed[v] = from_s[v] && to_t[v];

  Path p;
  int v = s;
  p.v.push_back(v);
  while (v != t) {
    auto next = rightmost_successor(d, v, allowed);
    if (!next) throw std::logic_error("greedy walk dead-ended; drawing is not acyclic?");
    v = *next;
    p.v.push_back(v);
  }
  return p;
}

}  // namespace updp
