#include "updp/reduction.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "sketch.hpp"
#include "updp/solver.hpp"

namespace updp {

using detail::Sketch;

namespace {

constexpr long long kColPitch = 200;   // x distance between grid columns
constexpr long long kRowPitch = 120;   // y distance between grid rows
constexpr long long kRowShift = 160;   // per-row x stagger; keeps B->T edges flowing forward

std::string cell_prefix(int row, int clause, int lit) {
  return "G_" + std::to_string(row + 1) + "_" + std::to_string(clause + 1) + "_" +
         std::to_string(lit + 1) + "/";
}

// ---- canonical subpaths of the witness construction ----

void append(Path& p, std::initializer_list<int> vs) { p.v.insert(p.v.end(), vs); }

void append_row_entry(Path& p, const CellHandles& c, bool h) {
  if (h) {
    const BoxHandles &b1 = c.box[0], &b3 = c.box[2];
    append(p, {c.Hin, b1.el, b1.r[1], b1.r[4], b1.r[7], b1.er, c.m[2], c.m[4], b3.et, b3.r[0],
               b3.r[4], b3.r[8], b3.eb, c.W});
  } else {
    append(p, {c.Lin, c.m[3], c.m[5], c.W});
  }
}

void append_z_exit(Path& p, const CellHandles& c, bool h) {
  if (h) {
    append(p, {c.Z, c.m[7], c.m[9], c.Hout});
  } else {
    const BoxHandles& b5 = c.box[4];
    append(p, {c.Z, b5.et, b5.r[0], b5.r[4], b5.r[8], b5.eb, c.m[8], c.m[10], c.m[11], c.Lout});
  }
}

Path x_path(const CellHandles& c, bool h) {
  Path p;
  if (h) {
    const BoxHandles& b2 = c.box[1];
    append(p, {c.X, b2.et, b2.r[0], b2.r[4], b2.r[8], b2.eb, c.m[3], c.m[5], c.m[6], c.m[8],
               c.m[10], c.Y});
  } else {
    const BoxHandles &b4 = c.box[3], &b6 = c.box[5];
    append(p, {c.X, c.m[2], c.m[4], b4.el, b4.r[1], b4.r[4], b4.r[7], b4.er, c.m[7], c.m[9], b6.et,
               b6.r[0], b6.r[4], b6.r[8], b6.eb, c.Y});
  }
  return p;
}

void append_clause_segment(Path& p, const CellHandles& c, bool h) {
  if (h) {
    const BoxHandles &b4 = c.box[3], &b5 = c.box[4], &b6 = c.box[5];
    append(p, {c.T, c.m[1], c.eplus_mark, b4.et, b4.r[0], b4.r[4], b4.r[8], b4.eb, c.m[0],
               c.bnd_m0b5[0], c.bnd_m0b5[1], b5.el, b5.r[1], b5.r[4], b5.r[7], b5.er,
               c.bnd_b5b6[0], c.bnd_b5b6[1], b6.el, b6.r[1], b6.r[4], b6.r[7], b6.er, c.bnd_b6m11,
               c.m[11], c.m[12], c.B});
  } else {
    const BoxHandles &b1 = c.box[0], &b2 = c.box[1], &b3 = c.box[2];
    append(p, {c.T, c.m[1], b1.et, b1.r[0], b1.r[4], b1.r[8], b1.eb, c.bnd_b1b2, b2.el, b2.r[1],
               b2.r[4], b2.r[7], b2.er, c.bnd_b2b3[0], c.bnd_b2b3[1], b3.el, b3.r[1], b3.r[4],
               b3.r[7], b3.er, c.bnd_b3m0[0], c.bnd_b3m0[1], c.m[0], c.m[6], c.bnd_m6m12, c.m[12],
               c.B});
  }
}

// which boxes route tb-compatibly, by row direction and clause-path presence
std::array<bool, 6> box_modes(bool h, bool active) {
  if (h) return {false, true, true, true, !active, !active};
  return {true, !active, !active, false, true, true};
}

}  // namespace

int ReductionOutput::v_of(const std::string& label) const {
  auto it = labels.find(label);
  if (it == labels.end()) throw std::invalid_argument("unknown label: " + label);
  return it->second;
}

namespace {

// Classifies pair roles from endpoint labels; shared by reduce() and
// reconstruct_reduction().
void classify_pairs(ReductionOutput& out) {
  const int n = out.nrows, N = out.ncols;
  out.vpair.assign(n, -1);
  out.zpair.assign(n, std::vector<int>(N, -1));
  out.xypair.assign(n, std::vector<int>(N, -1));
  out.cpair.assign(out.cnf.clauses.size(), -1);
  out.boxpair.assign(n, std::vector<std::array<std::array<int, 4>, 6>>(N));
  for (auto& row : out.boxpair)
    for (auto& cell : row)
      for (auto& box : cell) box.fill(-1);

  std::map<int, int> colof;  // column base per clause
  {
    int c = 0;
    for (size_t j = 0; j < out.cnf.clauses.size(); ++j) {
      colof[static_cast<int>(j)] = c;
      c += static_cast<int>(out.cnf.clauses[j].size());
    }
  }
  auto cell_of = [&](int clause, int lit) { return colof.at(clause) + lit; };

  for (size_t idx = 0; idx < out.instance.pairs.size(); ++idx) {
    const std::string& sl = out.vertex_label.at(out.instance.pairs[idx].first);
    int i, j, t, k, s;
    char rest[64];
    if (std::sscanf(sl.c_str(), "V_%d", &i) == 1 && sl.find('/') == std::string::npos &&
        sl.back() != '\'') {
      out.vpair.at(i - 1) = static_cast<int>(idx);
    } else if (std::sscanf(sl.c_str(), "C_%d", &j) == 1 && sl.find('/') == std::string::npos &&
               sl.back() != '\'') {
      out.cpair.at(j - 1) = static_cast<int>(idx);
    } else if (std::sscanf(sl.c_str(), "G_%d_%d_%d/%63s", &i, &j, &t, rest) == 4) {
      int col = cell_of(j - 1, t - 1);
      std::string r(rest);
      if (r == "Z")
        out.zpair.at(i - 1).at(col) = static_cast<int>(idx);
      else if (r == "X")
        out.xypair.at(i - 1).at(col) = static_cast<int>(idx);
      else if (std::sscanf(r.c_str(), "b_%d.v%d", &k, &s) == 2)
        out.boxpair.at(i - 1).at(col).at(k - 1).at(s - 1) = static_cast<int>(idx);
      else
        throw std::logic_error("unclassifiable pair source label: " + sl);
    } else {
      throw std::logic_error("unclassifiable pair source label: " + sl);
    }
  }
  for (int i = 0; i < n; ++i) {
    if (out.vpair[i] < 0) throw std::logic_error("missing V pair");
    for (int c = 0; c < N; ++c) {
      if (out.zpair[i][c] < 0 || out.xypair[i][c] < 0)
        throw std::logic_error("missing chain pair");
      for (const auto& box : out.boxpair[i][c])
        for (int idx : box)
          if (idx < 0) throw std::logic_error("missing routing-box pair");
    }
  }
  for (int x : out.cpair)
    if (x < 0) throw std::logic_error("missing clause pair");
}

CellHandles resolve_cell(const std::map<std::string, int>& labels, const std::string& prefix) {
  auto get = [&](const std::string& name) {
    auto it = labels.find(prefix + name);
    if (it == labels.end()) throw std::invalid_argument("labels missing " + prefix + name);
    return it->second;
  };
  CellHandles c;
  c.Hin = get("H^in");
  c.Lin = get("L^in");
  c.T = get("T");
  c.B = get("B");
  c.Hout = get("H^out");
  c.Lout = get("L^out");
  c.X = get("X");
  c.Y = get("Y");
  c.Z = get("Z");
  c.W = get("W");
  for (int i = 0; i < 13; ++i) c.m[i] = get("m_" + std::to_string(i));
  c.eplus_mark = get("bnd.ep");
  c.bnd_b1b2 = get("bnd.b1b2");
  c.bnd_m6m12 = get("bnd.m6m12");
  c.bnd_b6m11 = get("bnd.b6m11");
  c.bnd_b2b3 = {get("bnd.b2b3.1"), get("bnd.b2b3.2")};
  c.bnd_b3m0 = {get("bnd.b3m0.1"), get("bnd.b3m0.2")};
  c.bnd_m0b5 = {get("bnd.m0b5.1"), get("bnd.m0b5.2")};
  c.bnd_b5b6 = {get("bnd.b5b6.1"), get("bnd.b5b6.2")};
  for (int k = 0; k < 6; ++k) {
    std::string bp = "b_" + std::to_string(k + 1) + ".";
    BoxHandles& b = c.box[k];
    b.et = get(bp + "et");
    b.el = get(bp + "el");
    b.er = get(bp + "er");
    b.eb = get(bp + "eb");
    for (int i = 0; i < 4; ++i) {
      b.v[i] = get(bp + "v" + std::to_string(i + 1));
      b.u[i] = get(bp + "u" + std::to_string(i + 1));
    }
    for (int i = 0; i < 9; ++i) b.r[i] = get(bp + "r" + std::to_string(i + 1));
  }
  c.eminus_mark = c.box[0].et;
  return c;
}

}  // namespace

ReductionOutput reduce(const Cnf& cnf) {
  if (cnf.nvars < 1) throw std::invalid_argument("need at least one variable");
  if (cnf.clauses.empty()) throw std::invalid_argument("need at least one clause");
  for (const auto& cl : cnf.clauses) {
    if (cl.empty()) throw std::invalid_argument("empty clause");
    for (int lit : cl)
      if (lit == 0 || std::abs(lit) > cnf.nvars)
        throw std::invalid_argument("literal out of range");
  }

  ReductionOutput out;
  out.cnf = cnf;
  const int n = cnf.nvars;
  out.nrows = n;
  for (size_t j = 0; j < cnf.clauses.size(); ++j)
    for (size_t t = 0; t < cnf.clauses[j].size(); ++t) {
      int lit = cnf.clauses[j][t];
      out.col_var.push_back(std::abs(lit) - 1);
      out.col_sign.push_back(lit > 0 ? 1 : -1);
      out.col_clause.push_back(static_cast<int>(j));
      out.col_lit.push_back(static_cast<int>(t));
    }
  const int N = static_cast<int>(out.col_var.size());
  out.ncols = N;

  Sketch sk;
  out.cell.assign(n, {});
  for (int i = 0; i < n; ++i) {
    for (int c = 0; c < N; ++c) {
      Drop drop = Drop::None;
      if (out.col_var[c] == i) drop = out.col_sign[c] > 0 ? Drop::EMinus : Drop::EPlus;
      out.cell[i].push_back(detail::add_crossing_cell(
          sk, cell_prefix(i, out.col_clause[c], out.col_lit[c]), kColPitch * c + kRowShift * i,
          -kRowPitch * i, drop));
    }
  }

  std::vector<int> V(n), Vp(n);
  const int m = static_cast<int>(cnf.clauses.size());
  std::vector<int> C(m), Cp(m);
  for (int i = 0; i < n; ++i) {
    V[i] = sk.vertex("V_" + std::to_string(i + 1), kRowShift * i - 44, -kRowPitch * i);
    Vp[i] = sk.vertex("V_" + std::to_string(i + 1) + "'",
                      kColPitch * (N - 1) + kRowShift * i + 188, -kRowPitch * i);
    sk.edge(V[i], out.cell[i][0].Hin);
    sk.edge(V[i], out.cell[i][0].Lin);
    sk.edge(out.cell[i][N - 1].Hout, Vp[i]);
    sk.edge(out.cell[i][N - 1].Lout, Vp[i]);
    for (int c = 0; c + 1 < N; ++c) {
      sk.edge(out.cell[i][c].Hout, out.cell[i][c + 1].Hin);
      sk.edge(out.cell[i][c].Lout, out.cell[i][c + 1].Lin);
    }
  }
  for (int c = 0; c < N; ++c)
    for (int i = 0; i + 1 < n; ++i) sk.edge(out.cell[i][c].B, out.cell[i + 1][c].T);
  {
    int c0 = 0;
    for (int j = 0; j < m; ++j) {
      int width = static_cast<int>(cnf.clauses[j].size());
      C[j] = sk.vertex("C_" + std::to_string(j + 1), kColPitch * c0 - 40, 64);
      Cp[j] = sk.vertex("C_" + std::to_string(j + 1) + "'",
                        kColPitch * (c0 + width - 1) + kRowShift * (n - 1) + 184,
                        -kRowPitch * (n - 1) - 64);
      for (int t = 0; t < width; ++t) {
        sk.edge(C[j], out.cell[0][c0 + t].T);
        sk.edge(out.cell[n - 1][c0 + t].B, Cp[j]);
      }
      c0 += width;
    }
  }

  // pairs, in a fixed documented order: row heads, Z chains, X/Y, clauses, boxes
  for (int i = 0; i < n; ++i) sk.pair(V[i], out.cell[i][0].W);
  for (int i = 0; i < n; ++i) {
    for (int c = 0; c + 1 < N; ++c) sk.pair(out.cell[i][c].Z, out.cell[i][c + 1].W);
    sk.pair(out.cell[i][N - 1].Z, Vp[i]);
  }
  for (int i = 0; i < n; ++i)
    for (int c = 0; c < N; ++c) sk.pair(out.cell[i][c].X, out.cell[i][c].Y);
  for (int j = 0; j < m; ++j) sk.pair(C[j], Cp[j]);
  for (int i = 0; i < n; ++i)
    for (int c = 0; c < N; ++c) detail::add_box_pairs(sk, out.cell[i][c]);

  out.instance = sk.finish();
  out.labels = sk.labels();
  out.vertex_label = sk.label_by_vertex();
  classify_pairs(out);
  return out;
}

std::optional<PathSet> witness_from_assignment(const ReductionOutput& out,
                                               const std::vector<int>& beta) {
  if (static_cast<int>(beta.size()) != out.cnf.nvars)
    throw std::invalid_argument("assignment length mismatch");
  if (!cnf_satisfied(out.cnf, beta)) return std::nullopt;

  const int n = out.nrows, N = out.ncols;
  const int m = static_cast<int>(out.cnf.clauses.size());

  // pick one satisfied literal column per clause
  std::vector<int> tstar(m, -1);
  for (int c = 0; c < N; ++c) {
    int j = out.col_clause[c];
    if (tstar[j] >= 0) continue;
    bool sat = out.col_sign[c] > 0 ? beta[out.col_var[c]] == 1 : beta[out.col_var[c]] == 0;
    if (sat) tstar[j] = c;
  }

  PathSet ps(out.instance.pairs.size());
  for (int i = 0; i < n; ++i) {
    bool h = beta[i] == 1;
    Path& vp = ps[out.vpair[i]];
    vp.v.push_back(out.v_of("V_" + std::to_string(i + 1)));
    append_row_entry(vp, out.cell[i][0], h);
    for (int c = 0; c < N; ++c) {
      const CellHandles& cell = out.cell[i][c];
      bool active = tstar[out.col_clause[c]] == c;
      ps[out.xypair[i][c]] = x_path(cell, h);
      Path& zp = ps[out.zpair[i][c]];
      append_z_exit(zp, cell, h);
      if (c + 1 < N)
        append_row_entry(zp, out.cell[i][c + 1], h);
      else
        zp.v.push_back(out.v_of("V_" + std::to_string(i + 1) + "'"));
      std::array<bool, 6> tb = box_modes(h, active);
      for (int k = 0; k < 6; ++k) {
        std::array<Path, 4> internal = box_internal_paths(cell.box[k], tb[k]);
        for (int s = 0; s < 4; ++s) ps[out.boxpair[i][c][k][s]] = internal[s];
      }
    }
  }
  for (int j = 0; j < m; ++j) {
    Path& cp = ps[out.cpair[j]];
    cp.v.push_back(out.v_of("C_" + std::to_string(j + 1)));
    for (int i = 0; i < n; ++i)
      append_clause_segment(cp, out.cell[i][tstar[j]], beta[i] == 1);
    cp.v.push_back(out.v_of("C_" + std::to_string(j + 1) + "'"));
  }

  Report rep;
  if (!verify_solution(out.instance, ps, &rep))
    throw std::logic_error("constructed witness fails verification:\n" + rep.to_string());
  return ps;
}

std::vector<int> assignment_from_solution(const ReductionOutput& out, const PathSet& ps) {
  std::vector<int> beta(out.nrows, -1);
  for (int i = 0; i < out.nrows; ++i) {
    const Path& p = ps.at(out.vpair[i]);
    for (int v : p.v) {
      if (v == out.cell[i][0].Hin) beta[i] = 1;
      if (v == out.cell[i][0].Lin) beta[i] = 0;
    }
    if (beta[i] < 0)
      throw std::logic_error("row path avoids both gadget entries; not a valid solution");
  }
  return beta;
}

ReductionOutput reconstruct_reduction(Instance inst, std::map<std::string, int> labels) {
  ReductionOutput out;
  out.instance = std::move(inst);
  out.labels = std::move(labels);
  out.vertex_label.assign(out.instance.drawing.n(), "");
  for (const auto& [name, v] : out.labels) {
    if (v < 0 || v >= out.instance.drawing.n())
      throw std::invalid_argument("label " + name + " out of range");
    out.vertex_label[v] = name;
  }

  // grid dimensions from the cell prefixes
  int n = 0, m = 0;
  std::map<int, int> width;  // clause -> literal count
  for (const auto& [name, v] : out.labels) {
    int i, j, t;
    if (std::sscanf(name.c_str(), "G_%d_%d_%d/", &i, &j, &t) == 3) {
      n = std::max(n, i);
      m = std::max(m, j);
      width[j - 1] = std::max(width[j - 1], t);
    }
  }
  if (n == 0 || m == 0) throw std::invalid_argument("labels contain no grid cells");
  out.nrows = n;

  out.cell.assign(n, {});
  for (int j = 0; j < m; ++j)
    for (int t = 0; t < width[j]; ++t) {
      out.col_clause.push_back(j);
      out.col_lit.push_back(t);
      for (int i = 0; i < n; ++i)
        out.cell[i].push_back(resolve_cell(out.labels, cell_prefix(i, j, t)));
    }
  out.ncols = static_cast<int>(out.col_clause.size());

  // literal recovery: per column exactly one row misses exactly one marker edge
  const Drawing& d = out.instance.drawing;
  for (int c = 0; c < out.ncols; ++c) {
    int var = -1, sign = 0;
    for (int i = 0; i < n; ++i) {
      const CellHandles& cell = out.cell[i][c];
      bool eplus = d.has_edge(cell.m[1], cell.eplus_mark);
      bool eminus = d.has_edge(cell.m[1], cell.eminus_mark);
      if (eplus && eminus) continue;
      if (!eplus && !eminus)
        throw std::invalid_argument("cell with both marker edges missing");
      if (var >= 0) throw std::invalid_argument("column with two dropped marker edges");
      var = i;
      sign = eminus ? -1 : 1;  // e+ missing -> negated literal
    }
    if (var < 0) throw std::invalid_argument("column without a dropped marker edge");
    out.col_var.push_back(var);
    out.col_sign.push_back(sign);
  }

  out.cnf.nvars = n;
  out.cnf.clauses.assign(m, {});
  for (int c = 0; c < out.ncols; ++c)
    out.cnf.clauses[out.col_clause[c]].push_back(out.col_sign[c] * (out.col_var[c] + 1));

  classify_pairs(out);
  return out;
}

std::string serialize_labels(const std::map<std::string, int>& labels) {
  std::ostringstream os;
  for (const auto& [name, v] : labels) os << name << ' ' << v << '\n';
  return os.str();
}

std::map<std::string, int> parse_labels(const std::string& text) {
  std::map<std::string, int> out;
  std::istringstream in(text);
  std::string name;
  long long v;
  while (in >> name >> v) out[name] = static_cast<int>(v);
  return out;
}

}  // namespace updp
