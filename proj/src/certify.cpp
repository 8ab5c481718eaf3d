#include "updp/certify.hpp"

#include <sstream>

#include "updp/gadgets.hpp"
#include "updp/rightmost.hpp"

namespace updp {

namespace {

// the two routings of the crossing gadget, as frozen traversal lists
const std::vector<std::string> kHighRouting = {
    "H^in -> b_1 -> m_2 -> m_4 -> b_3 -> W",
    "X -> b_2 -> m_3 -> m_5 -> m_6 -> m_8 -> m_10 -> Y",
    "Z -> m_7 -> m_9 -> H^out",
    "T -> m_1 -> b_4 -> m_0 -> b_5 -> b_6 -> m_11 -> m_12 -> B",
};
const std::vector<std::string> kLowRouting = {
    "L^in -> m_3 -> m_5 -> W",
    "X -> m_2 -> m_4 -> b_4 -> m_7 -> m_9 -> b_6 -> Y",
    "Z -> b_5 -> m_8 -> m_10 -> m_11 -> L^out",
    "T -> m_1 -> b_1 -> b_2 -> b_3 -> m_0 -> m_6 -> m_12 -> B",
};

struct Certifier {
  SearchBudget budget;
  std::vector<CertCheck> checks;

  void add(const std::string& name, bool pass, std::string detail = "", long long nodes = 0) {
    checks.push_back({name, pass, std::move(detail), nodes});
  }

  bool residual_reach(const Instance& inst, const PathSet& sol, std::span<const int> remove,
                      int a, int b) {
    std::vector<char> alive(inst.drawing.n(), 1);
    for (int i : remove)
      for (int v : sol[i].v) alive[v] = 0;
    return reachable_from(inst.drawing, a, &alive)[b];
  }

  void routing_gadget() {
    Gadget g = build_routing_gadget();
    SolveOutcome so = exact_solve(g.instance, budget);
    add("routing: internal pairs are solvable", so.status == SolveStatus::Solved, "",
        so.stats.oracle_nodes);

    CountResult cr = count_solutions(g.instance, 64, 0, budget);
    add("routing: all internal routings enumerated", cr.status == SolveStatus::Solved,
        "found " + std::to_string(cr.distinct), cr.nodes_used);

    int et = g.v("et"), el = g.v("el"), er = g.v("er"), eb = g.v("eb");
    bool never_bad = true, some_tb = false, some_lr = false, never_both = true;
    std::vector<int> all{0, 1, 2, 3};
    for (const PathSet& sol : cr.witnesses) {
      bool tb = residual_reach(g.instance, sol, all, et, eb);
      bool lr = residual_reach(g.instance, sol, all, el, er);
      if (residual_reach(g.instance, sol, all, et, er)) never_bad = false;
      if (residual_reach(g.instance, sol, all, el, eb)) never_bad = false;
      some_tb |= tb;
      some_lr |= lr;
      if (tb && lr) never_both = false;
    }
    add("routing: no routing leaves a top->right or left->bottom route", never_bad);
    add("routing: some routing leaves the top->bottom route open", some_tb);
    add("routing: some routing leaves the left->right route open", some_lr);
    add("routing: no routing leaves both through routes open", never_both);

    // no two disjoint through paths even ignoring the internal pairs
    EnumResult lrs = enumerate_st_paths(g.instance.drawing, el, er, 1000);
    EnumResult tbs = enumerate_st_paths(g.instance.drawing, et, eb, 1000);
    bool disjoint_pair = false;
    for (const Path& p : lrs.paths)
      for (const Path& q : tbs.paths) {
        std::vector<char> used(g.instance.drawing.n(), 0);
        for (int v : p.v) used[v] = 1;
        bool share = false;
        for (int v : q.v) share |= used[v];
        if (!share) disjoint_pair = true;
      }
    add("routing: left->right and top->bottom paths always intersect",
        !lrs.truncated && !tbs.truncated && !disjoint_pair,
        std::to_string(lrs.paths.size()) + " lr paths, " + std::to_string(tbs.paths.size()) +
            " tb paths");
  }

  Instance crossing_instance(const Gadget& g, bool high) {
    const CellHandles& c = g.cells[0];
    Instance inst = g.instance;
    inst.pairs.clear();
    inst.pairs.emplace_back(high ? c.Hin : c.Lin, c.W);
    inst.pairs.emplace_back(c.X, c.Y);
    inst.pairs.emplace_back(c.Z, high ? c.Hout : c.Lout);
    inst.pairs.emplace_back(c.T, c.B);
    for (const BoxHandles& b : c.box)
      for (int i = 0; i < 4; ++i) inst.pairs.emplace_back(b.v[i], b.u[i]);
    return inst;
  }

  void crossing_gadget() {
    Gadget g = build_crossing_gadget();
    for (int cas = 0; cas < 2; ++cas) {
      bool high = cas == 0;
      std::string tag = high ? "crossing, H^in entry: " : "crossing, L^in entry: ";
      Instance inst = crossing_instance(g, high);
      CountResult cr = count_solutions(inst, 2, 0, budget);
      add(tag + "exactly one routing", cr.status == SolveStatus::Solved && cr.distinct == 1,
          "distinct " + std::to_string(cr.distinct), cr.nodes_used);
      if (cr.witnesses.empty()) continue;
      const PathSet& sol = cr.witnesses[0];
      const auto& golden = high ? kHighRouting : kLowRouting;
      bool byte_equal = true;
      std::string got;
      for (int i = 0; i < 4; ++i) {
        std::string tr = collapse_traversal(g.vertex_label, sol[i]);
        got += tr + "\n";
        if (tr != golden[i]) byte_equal = false;
      }
      add(tag + "traversals match the frozen lists", byte_equal, byte_equal ? "" : got);

      const CellHandles& c = g.cells[0];
      std::vector<int> named{0, 1, 3};  // entry, X, T; the exit connector stays
      bool good_exit = residual_reach(inst, sol, named, c.Z, high ? c.Hout : c.Lout);
      bool bad_exit = residual_reach(inst, sol, named, c.Z, high ? c.Lout : c.Hout);
      add(tag + "residual keeps only the matching exit", good_exit && !bad_exit);
    }

    // drop variants differ from the plain gadget by exactly one edge
    for (Drop drop : {Drop::EPlus, Drop::EMinus}) {
      Gadget gd = build_crossing_gadget(drop);
      size_t full = g.instance.drawing.m(), dropped = gd.instance.drawing.m();
      bool same_vertices = gd.instance.drawing.n() == g.instance.drawing.n();
      add(std::string("crossing: dropping ") + (drop == Drop::EPlus ? "e+" : "e-") +
              " removes exactly one edge",
          same_vertices && dropped + 1 == full);
    }
  }

  void rows() {
    for (int s = 1; s <= 2; ++s)
      for (RowVariant variant : {RowVariant::Plus, RowVariant::Minus}) {
        bool plus = variant == RowVariant::Plus;
        std::string tag =
            "row s=" + std::to_string(s) + (plus ? " with H^in entry: " : " with L^in entry: ");
        Gadget row = build_row(s, variant);
        CountResult cr =
            count_solutions(row.instance, 2, static_cast<size_t>(row.named_pairs), budget);
        add(tag + "unique chain routing",
            cr.status == SolveStatus::Solved && cr.distinct == 1,
            "distinct " + std::to_string(cr.distinct), cr.nodes_used);
        if (cr.witnesses.empty()) continue;
        const PathSet& sol = cr.witnesses[0];
        int entry = plus ? row.cells[0].Hin : row.cells[0].Lin;
        bool enters = sol[0].v.front() == entry;
        add(tag + "first path enters on the chosen side", enters);
        if (s == 2) {
          // pair order: entry, (X_1,Y_1), (Z_1,W_2)
          const Path& zw = sol[2];
          bool via = false, via_other = false;
          for (int v : zw.v) {
            via |= v == (plus ? row.cells[1].Hin : row.cells[1].Lin);
            via_other |= v == (plus ? row.cells[1].Lin : row.cells[1].Hin);
          }
          add(tag + "Z_1 -> W_2 passes through the same-side entry", via && !via_other,
              collapse_traversal(row.vertex_label, zw));
        }
      }
  }

  void columns() {
    for (int t = 1; t <= 2; ++t) {
      for (int mask = 0; mask < (1 << t); ++mask) {
        std::vector<Drop> drops(t, Drop::None);
        std::vector<RowVariant> starts;
        std::string sig;
        for (int i = 0; i < t; ++i) {
          bool plus = ((mask >> i) & 1) == 0;
          starts.push_back(plus ? RowVariant::Plus : RowVariant::Minus);
          sig += plus ? '+' : '-';
        }
        std::string tag = "column t=" + std::to_string(t) + " starts=" + sig + ": ";
        Gadget col = build_column(t, drops, starts);
        CountResult cr =
            count_solutions(col.instance, 8, static_cast<size_t>(col.named_pairs), budget);
        add(tag + "solvable", cr.status == SolveStatus::Solved,
            "distinct " + std::to_string(cr.distinct), cr.nodes_used);
        bool iff_ok = !cr.witnesses.empty();
        for (const PathSet& sol : cr.witnesses) {
          const Path& tb = sol[2 * t];  // entries, X/Ys, then (T,B)
          for (int i = 0; i < t; ++i) {
            bool ep = false, em = false;
            for (int v : tb.v) {
              ep |= v == col.cells[i].eplus_mark;
              em |= v == col.cells[i].eminus_mark;
            }
            bool plus = starts[i] == RowVariant::Plus;
            if (ep != plus || em == plus) iff_ok = false;
          }
        }
        add(tag + "every through path uses e+ iff the entry is H^in", iff_ok);
      }
    }
    // dropping the needed marker edge makes the column unsolvable
    struct DropCase {
      int t;
      std::vector<RowVariant> starts;
      std::vector<Drop> drops;
      std::string name;
    };
    std::vector<DropCase> cases = {
        {1, {RowVariant::Plus}, {Drop::EPlus}, "column t=1 starts=+ drop e+: unsolvable"},
        {1, {RowVariant::Minus}, {Drop::EMinus}, "column t=1 starts=- drop e-: unsolvable"},
        {2,
         {RowVariant::Plus, RowVariant::Plus},
         {Drop::None, Drop::EPlus},
         "column t=2 starts=++ drop e+ in G2: unsolvable"},
        {2,
         {RowVariant::Minus, RowVariant::Minus},
         {Drop::EMinus, Drop::None},
         "column t=2 starts=-- drop e- in G1: unsolvable"},
    };
    for (const auto& dc : cases) {
      Gadget col = build_column(dc.t, dc.drops, dc.starts);
      SolveOutcome so = exact_solve(col.instance, budget);
      add(dc.name, so.status == SolveStatus::NoSolution, "", so.stats.oracle_nodes);
    }
  }
};

}  // namespace

std::vector<CertCheck> run_certification(const SearchBudget& budget) {
  Certifier c{budget, {}};
  c.routing_gadget();
  c.crossing_gadget();
  c.rows();
  c.columns();
  return c.checks;
}

bool all_pass(const std::vector<CertCheck>& checks) {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

}  // namespace updp
