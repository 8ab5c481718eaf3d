#include "updp/gadgets.hpp"

#include <stdexcept>

#include "sketch.hpp"

namespace updp {

using detail::Sketch;

int Gadget::v(const std::string& label) const {
  auto it = labels.find(label);
  if (it == labels.end()) throw std::invalid_argument("unknown label: " + label);
  return it->second;
}

namespace detail {

BoxHandles add_routing_box(Sketch& sk, const std::string& prefix, long long cx, long long cy) {
  BoxHandles b;
  auto V = [&](const char* name, long long dx, long long dy) {
    return sk.vertex(prefix + name, cx + dx, cy + dy);
  };
  b.et = V("et", -4, 4);
  b.el = V("el", -4, 0);
  b.er = V("er", 4, 0);
  b.eb = V("eb", 4, -4);
  b.v[0] = V("v1", -3, 3);
  b.v[1] = V("v2", -1, 2);
  b.v[2] = V("v3", -1, -2);
  b.v[3] = V("v4", -3, -3);
  b.u[0] = V("u1", 1, 2);
  b.u[1] = V("u2", 3, 3);
  b.u[2] = V("u3", 3, -3);
  b.u[3] = V("u4", 1, -2);
  b.r[0] = V("r1", -2, 1);
  b.r[1] = V("r2", -2, 0);
  b.r[2] = V("r3", 0, 3);
  b.r[3] = V("r4", 0, 1);
  b.r[4] = V("r5", 0, 0);
  b.r[5] = V("r6", 0, -1);
  b.r[6] = V("r7", 0, -3);
  b.r[7] = V("r8", 2, 0);
  b.r[8] = V("r9", 2, -1);

  auto E = [&](int u, int v) { sk.edge(u, v); };
  E(b.et, b.r[0]);
  E(b.el, b.r[1]);
  E(b.v[0], b.r[0]);
  E(b.v[0], b.r[2]);
  E(b.v[1], b.r[2]);
  E(b.v[1], b.r[3]);
  E(b.v[2], b.r[5]);
  E(b.v[2], b.r[6]);
  E(b.v[3], b.r[1]);
  E(b.v[3], b.r[6]);
  E(b.r[0], b.r[3]);
  E(b.r[0], b.r[4]);
  E(b.r[1], b.r[4]);
  E(b.r[1], b.r[5]);
  E(b.r[2], b.u[0]);
  E(b.r[2], b.u[1]);
  E(b.r[3], b.u[0]);
  E(b.r[3], b.r[7]);
  E(b.r[4], b.r[7]);
  E(b.r[4], b.r[8]);
  E(b.r[5], b.r[8]);
  E(b.r[5], b.u[3]);
  E(b.r[6], b.u[3]);
  E(b.r[6], b.u[2]);
  E(b.r[7], b.u[1]);
  E(b.r[7], b.er);
  E(b.r[8], b.u[2]);
  E(b.r[8], b.eb);
  return b;
}

CellHandles add_crossing_cell(Sketch& sk, const std::string& prefix, long long ox, long long oy,
                              Drop drop) {
  CellHandles c;
  auto V = [&](const std::string& name, long long dx, long long dy) {
    return sk.vertex(prefix + name, ox + dx, oy + dy);
  };
  c.Hin = V("H^in", -20, 20);
  c.Lin = V("L^in", -20, -20);
  c.T = V("T", -8, 40);
  c.B = V("B", 148, -40);
  c.Hout = V("H^out", 164, 20);
  c.Lout = V("L^out", 164, -20);
  c.X = V("X", 16, 0);
  c.Y = V("Y", 132, 0);
  c.Z = V("Z", 88, 0);
  c.W = V("W", 60, 0);
  const long long mx[13] = {78, -2, 20, 32, 44, 52, 84, 92, 104, 116, 116, 140, 144};
  const long long my[13] = {0, 30, 20, -20, 20, -20, -20, 20, -20, 20, -20, -20, -30};
  for (int i = 0; i < 13; ++i) c.m[i] = V("m_" + std::to_string(i), mx[i], my[i]);

  c.box[0] = add_routing_box(sk, prefix + "b_1.", ox + 4, oy + 20);
  c.box[1] = add_routing_box(sk, prefix + "b_2.", ox + 24, oy - 10);
  c.box[2] = add_routing_box(sk, prefix + "b_3.", ox + 52, oy + 10);
  c.box[3] = add_routing_box(sk, prefix + "b_4.", ox + 72, oy + 20);
  c.box[4] = add_routing_box(sk, prefix + "b_5.", ox + 96, oy - 10);
  c.box[5] = add_routing_box(sk, prefix + "b_6.", ox + 124, oy + 10);
  c.eminus_mark = c.box[0].et;

  auto E = [&](int u, int v) { sk.edge(u, v); };
  using XY = std::pair<long long, long long>;
  auto C = [&](int u, std::initializer_list<XY> rel, int v, const std::string& lbl) {
    std::vector<XY> abs;
    for (const auto& [x, y] : rel) abs.emplace_back(ox + x, oy + y);
    sk.chain(u, abs, v, prefix + lbl);
  };

  E(c.Hin, c.box[0].el);
  E(c.Lin, c.m[3]);
  E(c.T, c.m[1]);
  if (drop != Drop::EMinus) E(c.m[1], c.box[0].et);  // e-
  // e+ runs m_1 -> bend -> b_4; dropping e+ removes only its first segment
  c.eplus_mark = sk.vertex(prefix + "bnd.ep", ox + 64, oy + 28);
  if (drop != Drop::EPlus) E(c.m[1], c.eplus_mark);
  E(c.eplus_mark, c.box[3].et);
  E(c.box[0].er, c.m[2]);
  c.bnd_b1b2 = sk.vertex(prefix + "bnd.b1b2", ox + 10, oy - 8);
  E(c.box[0].eb, c.bnd_b1b2);
  E(c.bnd_b1b2, c.box[1].el);
  E(c.m[2], c.m[4]);
  E(c.X, c.m[2]);
  E(c.X, c.box[1].et);
  E(c.box[1].eb, c.m[3]);
  C(c.box[1].er, {XY{34, -8}, XY{38, 8}}, c.box[2].el, "bnd.b2b3");
  c.bnd_b2b3 = {sk.labels().at(prefix + "bnd.b2b3.1"), sk.labels().at(prefix + "bnd.b2b3.2")};
  E(c.m[3], c.m[5]);
  E(c.m[4], c.box[2].et);
  E(c.m[4], c.box[3].el);
  E(c.box[2].eb, c.W);
  C(c.box[2].er, {XY{62, 8}, XY{66, 2}}, c.m[0], "bnd.b3m0");
  c.bnd_b3m0 = {sk.labels().at(prefix + "bnd.b3m0.1"), sk.labels().at(prefix + "bnd.b3m0.2")};
  E(c.m[5], c.W);
  E(c.m[5], c.m[6]);
  E(c.box[3].eb, c.m[0]);
  E(c.box[3].er, c.m[7]);
  E(c.m[0], c.m[6]);
  C(c.m[0], {XY{84, -2}, XY{88, -8}}, c.box[4].el, "bnd.m0b5");
  c.bnd_m0b5 = {sk.labels().at(prefix + "bnd.m0b5.1"), sk.labels().at(prefix + "bnd.m0b5.2")};
  E(c.m[6], c.m[8]);
  c.bnd_m6m12 = sk.vertex(prefix + "bnd.m6m12", ox + 88, oy - 28);
  E(c.m[6], c.bnd_m6m12);
  E(c.bnd_m6m12, c.m[12]);
  E(c.m[7], c.m[9]);
  E(c.Z, c.m[7]);
  E(c.Z, c.box[4].et);
  C(c.box[4].er, {XY{106, -8}, XY{110, 8}}, c.box[5].el, "bnd.b5b6");
  c.bnd_b5b6 = {sk.labels().at(prefix + "bnd.b5b6.1"), sk.labels().at(prefix + "bnd.b5b6.2")};
  E(c.box[4].eb, c.m[8]);
  E(c.m[8], c.m[10]);
  E(c.m[9], c.Hout);
  E(c.m[9], c.box[5].et);
  c.bnd_b6m11 = sk.vertex(prefix + "bnd.b6m11", ox + 136, oy + 8);
  E(c.box[5].er, c.bnd_b6m11);
  E(c.bnd_b6m11, c.m[11]);
  E(c.box[5].eb, c.Y);
  E(c.m[10], c.Y);
  E(c.m[10], c.m[11]);
  E(c.m[11], c.m[12]);
  E(c.m[11], c.Lout);
  E(c.m[12], c.B);
  return c;
}

void add_box_pairs(Sketch& sk, const CellHandles& c) {
  for (const BoxHandles& b : c.box)
    for (int i = 0; i < 4; ++i) sk.pair(b.v[i], b.u[i]);
}

Gadget finish_gadget(const Sketch& sk, std::vector<CellHandles> cells, int named_pairs) {
  Gadget g;
  g.instance = sk.finish();
  g.labels = sk.labels();
  g.vertex_label = sk.label_by_vertex();
  g.cells = std::move(cells);
  g.named_pairs = named_pairs;
  return g;
}

}  // namespace detail

Gadget build_routing_gadget() {
  Sketch sk;
  BoxHandles b = detail::add_routing_box(sk, "", 0, 0);
  for (int i = 0; i < 4; ++i) sk.pair(b.v[i], b.u[i]);
  return detail::finish_gadget(sk, {}, 0);
}

Gadget build_crossing_gadget(Drop drop) {
  Sketch sk;
  CellHandles c = detail::add_crossing_cell(sk, "", 0, 0, drop);
  sk.pair(c.X, c.Y);
  detail::add_box_pairs(sk, c);
  return detail::finish_gadget(sk, {c}, 1);
}

Gadget build_row(int s, RowVariant variant) {
  if (s < 1) throw std::invalid_argument("row length must be >= 1");
  Sketch sk;
  std::vector<CellHandles> cells;
  for (int c = 0; c < s; ++c) {
    std::string prefix = "G" + std::to_string(c + 1) + "/";
    cells.push_back(detail::add_crossing_cell(sk, prefix, 200LL * c, 0, Drop::None));
  }
  for (int c = 0; c + 1 < s; ++c) {
    sk.edge(cells[c].Hout, cells[c + 1].Hin);
    sk.edge(cells[c].Lout, cells[c + 1].Lin);
  }
  sk.pair(variant == RowVariant::Plus ? cells[0].Hin : cells[0].Lin, cells[0].W);
  for (int c = 0; c + 1 < s; ++c) sk.pair(cells[c].X, cells[c].Y);
  for (int c = 0; c + 1 < s; ++c) sk.pair(cells[c].Z, cells[c + 1].W);
  int named = sk.pair_count();
  for (const CellHandles& c : cells) detail::add_box_pairs(sk, c);
  return detail::finish_gadget(sk, std::move(cells), named);
}

Gadget build_column(int t, std::span<const Drop> drops, std::span<const RowVariant> starts) {
  if (t < 1) throw std::invalid_argument("column length must be >= 1");
  if (static_cast<int>(drops.size()) != t || static_cast<int>(starts.size()) != t)
    throw std::invalid_argument("drops and starts must have one entry per gadget");
  Sketch sk;
  std::vector<CellHandles> cells;
  for (int i = 0; i < t; ++i) {
    std::string prefix = "G" + std::to_string(i + 1) + "/";
    cells.push_back(detail::add_crossing_cell(sk, prefix, 160LL * i, -120LL * i, drops[i]));
  }
  for (int i = 0; i + 1 < t; ++i) sk.edge(cells[i].B, cells[i + 1].T);
  // short forced pairs first; they pin the box occupancies before the long
  // top-to-bottom path is searched
  for (int i = 0; i < t; ++i)
    sk.pair(starts[i] == RowVariant::Plus ? cells[i].Hin : cells[i].Lin, cells[i].W);
  for (int i = 0; i < t; ++i) sk.pair(cells[i].X, cells[i].Y);
  sk.pair(cells[0].T, cells[t - 1].B);
  int named = sk.pair_count();
  for (const CellHandles& c : cells) detail::add_box_pairs(sk, c);
  return detail::finish_gadget(sk, std::move(cells), named);
}

std::string collapse_traversal(const std::vector<std::string>& vertex_label, const Path& p) {
  std::string out;
  std::string prev;
  for (int v : p.v) {
    const std::string& full = vertex_label.at(v);
    std::string local = full;
    if (auto slash = local.rfind('/'); slash != std::string::npos) local = local.substr(slash + 1);
    if (local.rfind("bnd", 0) == 0) continue;
    if (local.rfind("b_", 0) == 0) {
      if (auto dot = local.find('.'); dot != std::string::npos) local = local.substr(0, dot);
    }
    if (local == prev) continue;
    if (!out.empty()) out += " -> ";
    out += local;
    prev = local;
  }
  return out;
}

std::array<Path, 4> box_internal_paths(const BoxHandles& b, bool tb_compatible) {
  if (tb_compatible) {
    // leaves r1, r5, r9 free
    return {Path{{b.v[0], b.r[2], b.u[0]}}, Path{{b.v[1], b.r[3], b.r[7], b.u[1]}},
            Path{{b.v[2], b.r[6], b.u[2]}}, Path{{b.v[3], b.r[1], b.r[5], b.u[3]}}};
  }
  // leaves r2, r5, r8 free
  return {Path{{b.v[0], b.r[0], b.r[3], b.u[0]}}, Path{{b.v[1], b.r[2], b.u[1]}},
          Path{{b.v[2], b.r[5], b.r[8], b.u[2]}}, Path{{b.v[3], b.r[6], b.u[3]}}};
}

Path box_through_tb(const BoxHandles& b) { return Path{{b.et, b.r[0], b.r[4], b.r[8], b.eb}}; }
Path box_through_lr(const BoxHandles& b) { return Path{{b.el, b.r[1], b.r[4], b.r[7], b.er}}; }

}  // namespace updp
