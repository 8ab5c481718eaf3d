#include "updp/solver.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

#include "updp/rightmost.hpp"

namespace updp {

const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Solved: return "SOLVED";
    case SolveStatus::NoSolution: return "NO_SOLUTION";
    case SolveStatus::BudgetExceeded: return "BUDGET_EXCEEDED";
  }
  return "?";
}

long long factorial(int k) {
  long long f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

std::vector<int> unrank_permutation(long long rank, int k) {
  std::vector<int> pool(k);
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<int> perm;
  perm.reserve(k);
  long long f = factorial(k);
  for (int i = k; i >= 1; --i) {
    f /= i;
    long long q = rank / f;
    rank %= f;
    perm.push_back(pool[q]);
    pool.erase(pool.begin() + q);
  }
  return perm;
}

std::optional<PathSet> route_in_order(const Instance& inst, std::span<const int> order,
                                      SolveStats* stats) {
  const Drawing& d = inst.drawing;
  std::vector<char> alive(d.n(), 1);
  PathSet ps(inst.pairs.size());
  for (int idx : order) {
    auto [s, t] = inst.pairs[idx];
    if (stats) ++stats->rightmost_calls;
    std::optional<Path> p = rightmost_path(d, s, t, &alive);
    if (!p) return std::nullopt;
    for (int v : p->v) alive[v] = 0;
    ps[idx] = std::move(*p);
  }
  return ps;
}

namespace {

bool precheck_reachability(const Instance& inst) {
  for (const auto& [s, t] : inst.pairs)
    if (!reachable_from(inst.drawing, s)[t]) return false;
  return true;
}

SolveOutcome solve_serial(const Instance& inst) {
  const int k = static_cast<int>(inst.pairs.size());
  SolveOutcome out;
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    ++out.stats.permutations_tried;
    if (auto ps = route_in_order(inst, perm, &out.stats)) {
      out.status = SolveStatus::Solved;
      out.solution = std::move(*ps);
      out.permutation = perm;
      return out;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  out.status = SolveStatus::NoSolution;
  return out;
}

// Same enumeration order, but abandons every permutation that starts with an
// already-failed routing prefix. Routing a prefix is deterministic, so this
// cannot change the first success.
SolveOutcome solve_prefix_pruned(const Instance& inst) {
  const int k = static_cast<int>(inst.pairs.size());
  SolveOutcome out;
  const Drawing& d = inst.drawing;

  struct Frame {
    std::vector<char> alive;
    PathSet ps;
  };
  std::vector<int> perm;
  std::vector<char> used(k, 0);
  std::vector<Frame> stack;
  stack.push_back({std::vector<char>(d.n(), 1), PathSet(k)});

  std::function<bool()> rec = [&]() -> bool {
    if (static_cast<int>(perm.size()) == k) {
      ++out.stats.permutations_tried;
      out.status = SolveStatus::Solved;
      out.solution = stack.back().ps;
      out.permutation = perm;
      return true;
    }
    for (int idx = 0; idx < k; ++idx) {
      if (used[idx]) continue;
      auto [s, t] = inst.pairs[idx];
      ++out.stats.rightmost_calls;
      std::optional<Path> p = rightmost_path(d, s, t, &stack.back().alive);
      if (!p) continue;  // every permutation with this prefix fails here
      Frame next = stack.back();
      for (int v : p->v) next.alive[v] = 0;
      next.ps[idx] = std::move(*p);
      stack.push_back(std::move(next));
      perm.push_back(idx);
      used[idx] = 1;
      if (rec()) return true;
      used[idx] = 0;
      perm.pop_back();
      stack.pop_back();
    }
    return false;
  };
  if (!rec()) out.status = SolveStatus::NoSolution;
  return out;
}

SolveOutcome solve_parallel(const Instance& inst) {
  const int k = static_cast<int>(inst.pairs.size());
  const long long total = factorial(k);
  std::atomic<long long> best_rank{total};
  std::atomic<long long> tried{0};
  std::atomic<long long> rm_calls{0};

#pragma omp parallel for schedule(dynamic, 8)
  for (long long rank = 0; rank < total; ++rank) {
    if (rank >= best_rank.load(std::memory_order_relaxed)) continue;
    std::vector<int> perm = unrank_permutation(rank, k);
    SolveStats local;
    std::optional<PathSet> ps = route_in_order(inst, perm, &local);
    tried.fetch_add(1, std::memory_order_relaxed);
    rm_calls.fetch_add(local.rightmost_calls, std::memory_order_relaxed);
    if (ps) {
      long long cur = best_rank.load();
      while (rank < cur && !best_rank.compare_exchange_weak(cur, rank)) {
      }
    }
  }

  SolveOutcome out;
  out.stats.permutations_tried = tried.load();
  out.stats.rightmost_calls = rm_calls.load();
  if (best_rank.load() == total) {
    out.status = SolveStatus::NoSolution;
    return out;
  }
  // speculative successes at higher ranks are discarded; report the
  // lexicographically first one
  out.permutation = unrank_permutation(best_rank.load(), k);
  out.solution = *route_in_order(inst, out.permutation, nullptr);
  out.status = SolveStatus::Solved;
  return out;
}

}  // namespace

SolveOutcome solve(const Instance& inst, const SolveOptions& opts) {
  const int k = static_cast<int>(inst.pairs.size());
  if (k > opts.max_k)
    throw std::invalid_argument("k = " + std::to_string(k) + " exceeds the permutation guardrail (" +
                                std::to_string(opts.max_k) + "); raise max_k to force");
  if (!precheck_reachability(inst)) {
    SolveOutcome out;
    out.status = SolveStatus::NoSolution;
    return out;
  }
  if (opts.parallel) return solve_parallel(inst);
  if (opts.prefix_prune) return solve_prefix_pruned(inst);
  return solve_serial(inst);
}

bool verify_solution(const Instance& inst, const PathSet& ps, Report* violations) {
  Report local;
  auto add = [&local](std::string s) { local.violations.push_back({std::move(s)}); };
  const Drawing& d = inst.drawing;
  if (ps.size() != inst.pairs.size()) {
    add("expected " + std::to_string(inst.pairs.size()) + " paths, got " + std::to_string(ps.size()));
  } else {
    std::vector<int> used(d.n(), -1);
    for (size_t i = 0; i < ps.size(); ++i) {
      const Path& p = ps[i];
      auto [s, t] = inst.pairs[i];
      if (p.v.empty()) {
        add("path " + std::to_string(i) + " is empty");
        continue;
      }
      if (p.v.front() != s)
        add("path " + std::to_string(i) + " does not start at its source");
      if (p.v.back() != t)
        add("path " + std::to_string(i) + " does not end at its target");
      std::set<int> seen;
      for (size_t j = 0; j < p.v.size(); ++j) {
        int v = p.v[j];
        if (v < 0 || v >= d.n()) {
          add("path " + std::to_string(i) + " leaves the drawing");
          break;
        }
        if (!seen.insert(v).second)
          add("path " + std::to_string(i) + " repeats vertex " + std::to_string(d.id[v]));
        if (used[v] >= 0 && used[v] != static_cast<int>(i))
          add("paths " + std::to_string(used[v]) + " and " + std::to_string(i) +
              " share vertex " + std::to_string(d.id[v]));
        used[v] = static_cast<int>(i);
        if (j + 1 < p.v.size() && !d.has_edge(v, p.v[j + 1]))
          add("path " + std::to_string(i) + " uses non-edge " + std::to_string(d.id[v]) + "->" +
              std::to_string(d.id[p.v[j + 1]]));
      }
    }
  }
  if (violations) *violations = local;
  return local.ok();
}

}  // namespace updp
