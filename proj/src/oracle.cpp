#include "updp/oracle.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace updp {

namespace {

struct BudgetExceededTag {};

// DFS over simple paths from path.back() to t restricted to free vertices.
// The vertices of the current partial path are kept at free == 0 by run()
// itself; t may be non-free (reserved terminal). sink returns false to stop
// the whole enumeration.
struct PathDfs {
  const Drawing& d;
  std::vector<char>& free;
  long long* nodes = nullptr;
  long long max_nodes = -1;

  bool run(std::vector<int>& path, int t, const std::function<bool(const std::vector<int>&)>& sink) {
    int head = path.back();
    if (head == t) return sink(path);
    for (int w : d.out[head]) {
      if (w != t && !free[w]) continue;
      if (w == t && !path_free_target(path, t)) continue;
      if (nodes) {
        if (max_nodes >= 0 && *nodes >= max_nodes) throw BudgetExceededTag{};
        ++*nodes;
      }
      if (!reaches_through(w, t)) continue;
      char prev = free[w];
      free[w] = 0;
      path.push_back(w);
      bool go_on = run(path, t, sink);
      path.pop_back();
      free[w] = prev;
      if (!go_on) return false;
    }
    return true;
  }

  // t can appear once at the end; never as an interior revisit
  static bool path_free_target(const std::vector<int>& path, int t) {
    return std::find(path.begin(), path.end(), t) == path.end();
  }

  // can t be reached from v through free vertices (v itself need not be free)
  bool reaches_through(int v, int t) {
    if (v == t) return true;
    std::vector<char> vis(d.n(), 0);
    std::vector<int> stack{v};
    vis[v] = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int w : d.out[x]) {
        if (w == t) return true;
        if (vis[w] || !free[w]) continue;
        vis[w] = 1;
        stack.push_back(w);
      }
    }
    return false;
  }
};

}  // namespace

EnumResult enumerate_st_paths(const Drawing& d, int s, int t, size_t limit) {
  EnumResult res;
  if (s == t) return res;
  std::vector<char> free(d.n(), 1);
  free[s] = 0;
  PathDfs dfs{d, free};
  std::vector<int> path{s};
  dfs.run(path, t, [&](const std::vector<int>& p) {
    if (res.paths.size() == limit) {
      res.truncated = true;
      return false;
    }
    res.paths.push_back(Path{p});
    return true;
  });
  return res;
}

namespace {

// P ⊆ P' ∪ Right(P') for polylines sharing both endpoints: at every common
// height the x of P is >= the x of P'.
bool never_left_of(const std::vector<Point>& p, const std::vector<Point>& q) {
  std::vector<Rat> ys;
  for (const Point& a : p) ys.push_back(a.y);
  for (const Point& a : q) ys.push_back(a.y);
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
  std::vector<Rat> samples;
  for (size_t i = 0; i < ys.size(); ++i) {
    samples.push_back(ys[i]);
    if (i + 1 < ys.size()) samples.push_back((ys[i] + ys[i + 1]) / 2);
  }
  for (const Rat& y : samples) {
    Rat xp = horizontal_crossings(p, y)[0];
    Rat xq = horizontal_crossings(q, y)[0];
    if (xp < xq) return false;
  }
  return true;
}

}  // namespace

std::optional<Path> rightmost_by_definition(const Drawing& d, int s, int t, size_t enum_limit) {
  EnumResult en = enumerate_st_paths(d, s, t, enum_limit);
  if (en.truncated) throw std::logic_error("path enumeration limit exceeded");
  if (en.paths.empty()) return std::nullopt;
  std::vector<std::vector<Point>> lines;
  lines.reserve(en.paths.size());
  for (const Path& p : en.paths) lines.push_back(polyline(d, p));
  std::optional<Path> winner;
  for (size_t i = 0; i < en.paths.size(); ++i) {
    bool ok = true;
    for (size_t j = 0; ok && j < en.paths.size(); ++j)
      if (i != j && !never_left_of(lines[i], lines[j])) ok = false;
    if (ok) {
      if (winner) throw std::logic_error("two paths qualify as rightmost");
      winner = en.paths[i];
    }
  }
  if (!winner) throw std::logic_error("no path qualifies as rightmost");
  return winner;
}

namespace {

struct Backtracker {
  const Instance& inst;
  long long max_nodes;
  long long nodes = 0;
  std::vector<char> free;
  std::vector<char> routed;
  int routed_count = 0;
  PathSet current;
  std::function<bool(const PathSet&)> on_solution;  // false = stop search

  explicit Backtracker(const Instance& i, long long maxn)
      : inst(i), max_nodes(maxn), free(i.drawing.n(), 1), routed(i.pairs.size(), 0),
        current(i.pairs.size()) {
    // solution paths are pairwise disjoint, so no path may cross a foreign terminal
    for (const auto& [s, t] : inst.pairs) free[s] = free[t] = 0;
  }

  // candidate paths of pair j in the current residual, counted up to cap.
  // Returns cap when the step limit is hit before the enumeration finished
  // (i.e. "unknown, at least one was not excluded").
  int probe(int j, int cap) {
    auto [s, t] = inst.pairs[j];
    PathDfs dfs{inst.drawing, free};
    long long steps = 0;
    dfs.nodes = &steps;
    dfs.max_nodes = 2000;
    int found = 0;
    std::vector<int> path{s};
    try {
      dfs.run(path, t, [&](const std::vector<int>&) { return ++found < cap; });
    } catch (BudgetExceededTag) {
      return cap;
    }
    return found;
  }

  // Most-constrained-pair-first selection: any pair with zero candidates kills
  // the branch at once, a pair with a unique candidate is routed first. This
  // only reorders the search; the set of solutions is order-independent.
  // Returns false when the search was stopped by the sink.
  bool place() {
    if (routed_count == static_cast<int>(inst.pairs.size())) return on_solution(current);
    int pick = -1;
    for (size_t j = 0; j < inst.pairs.size(); ++j) {
      if (routed[j]) continue;
      if (pick < 0) pick = static_cast<int>(j);
      int c = probe(static_cast<int>(j), 2);
      if (c == 0) return true;  // dead branch
      if (c == 1) {
        pick = static_cast<int>(j);
        break;
      }
    }
    auto [s, t] = inst.pairs[pick];
    PathDfs dfs{inst.drawing, free, &nodes, max_nodes};
    std::vector<int> path{s};
    routed[pick] = 1;
    ++routed_count;
    bool go_on = dfs.run(path, t, [&](const std::vector<int>& p) {
      current[pick] = Path{p};
      return place();
    });
    routed[pick] = 0;
    --routed_count;
    return go_on;
  }
};

}  // namespace

SolveOutcome exact_solve(const Instance& inst, const SearchBudget& budget) {
  SolveOutcome out;
  Backtracker bt(inst, budget.max_nodes);
  bool found = false;
  bt.on_solution = [&](const PathSet& ps) {
    out.solution = ps;
    found = true;
    return false;
  };
  try {
    bt.place();
  } catch (BudgetExceededTag) {
    out.status = SolveStatus::BudgetExceeded;
    out.stats.oracle_nodes = bt.nodes;
    return out;
  }
  out.status = found ? SolveStatus::Solved : SolveStatus::NoSolution;
  out.stats.oracle_nodes = bt.nodes;
  return out;
}

namespace {

std::string projection_key(const PathSet& ps, size_t prefix) {
  std::string key;
  size_t upto = prefix == 0 ? ps.size() : std::min(prefix, ps.size());
  for (size_t i = 0; i < upto; ++i) {
    for (int v : ps[i].v) {
      key += std::to_string(v);
      key += ',';
    }
    key += ';';
  }
  return key;
}

}  // namespace

CountResult count_solutions(const Instance& inst, size_t cap, size_t project_prefix,
                            const SearchBudget& budget) {
  CountResult res;
  Backtracker bt(inst, budget.max_nodes);
  std::set<std::string> keys;
  bt.on_solution = [&](const PathSet& ps) {
    ++res.raw_solutions;
    if (keys.insert(projection_key(ps, project_prefix)).second) {
      ++res.distinct;
      res.witnesses.push_back(ps);
      if (res.distinct >= static_cast<long long>(cap)) return false;
    }
    return true;
  };
  try {
    bt.place();
  } catch (BudgetExceededTag) {
    res.status = SolveStatus::BudgetExceeded;
    res.nodes_used = bt.nodes;
    return res;
  }
  res.status = res.distinct > 0 ? SolveStatus::Solved : SolveStatus::NoSolution;
  res.nodes_used = bt.nodes;
  return res;
}

}  // namespace updp
