#pragma once

#include <array>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "updp/drawing.hpp"

namespace updp {

enum class Drop { None, EPlus, EMinus };
enum class RowVariant { Plus, Minus };

struct BoxHandles {
  int et = -1, el = -1, er = -1, eb = -1;  // boundary stubs
  std::array<int, 4> v{};                  // pair sources 1..4
  std::array<int, 4> u{};                  // pair targets 1..4
  std::array<int, 9> r{};                  // interior switch vertices
};

// Vertex handles of one crossing gadget. eplus_mark / eminus_mark are interior
// to the respective marker edges: a path uses e+ (e-) iff it visits the mark.
struct CellHandles {
  int Hin = -1, Lin = -1, T = -1, B = -1, Hout = -1, Lout = -1;
  int X = -1, Y = -1, Z = -1, W = -1;
  std::array<int, 13> m{};
  int eplus_mark = -1;   // first bend of the e+ chain
  int eminus_mark = -1;  // et stub of box 1
  std::array<BoxHandles, 6> box{};
  // bend vertices needed to spell out canonical routings
  int bnd_b1b2 = -1, bnd_m6m12 = -1, bnd_b6m11 = -1;
  std::array<int, 2> bnd_b2b3{}, bnd_b3m0{}, bnd_m0b5{}, bnd_b5b6{};
};

struct Gadget {
  Instance instance;
  std::map<std::string, int> labels;
  std::vector<std::string> vertex_label;  // by vertex handle
  std::vector<CellHandles> cells;         // one per crossing gadget, in layout order
  int named_pairs = 0;  // pairs preceding the routing-box block; projection prefix
                        // for uniqueness counting

  int v(const std::string& label) const;  // throws on unknown label
};

// The 17-vertex planar routing device with one boundary stub per connection
// (e_t and e_l in, e_r and e_b out) and pairs (1,1), ..., (4,4). In any
// routing of those pairs, through-traffic can pass top->bottom or
// left->right, never top->right or left->bottom.
Gadget build_routing_gadget();

// The crossing fragment: six routing boxes b_1..b_6, connection vertices
// m_0..m_12, ports H^in/L^in/T in and H^out/L^out/B out, and the literal
// marker edges e+ (into b_4) and e- (into b_1). `drop` removes exactly one
// edge. internal pairs: (X,Y) then the 24 box pairs.
Gadget build_crossing_gadget(Drop drop = Drop::None);

// s crossing gadgets left to right, joined by (H_j^out,H_{j+1}^in) and
// (L_j^out,L_{j+1}^in). Pairs: the entry pair (H_1^in,W_1) or (L_1^in,W_1)
// per `variant`, then (X_j,Y_j) and (Z_j,W_{j+1}) for j in [s-1], then boxes.
Gadget build_row(int s, RowVariant variant);

// t crossing gadgets top to bottom, joined by (B_i,T_{i+1}). Pairs: the entry
// pairs per `starts`, then (T_1,B_t), then (X_i,Y_i) for i in [t], then boxes.
Gadget build_column(int t, std::span<const Drop> drops, std::span<const RowVariant> starts);

// Label-level rendering of a path: routing-box interiors collapse to the box
// name, bend vertices vanish. "H^in -> b_1 -> m_2 -> ..."
std::string collapse_traversal(const std::vector<std::string>& vertex_label, const Path& p);

// Canonical internal routings of one routing box. A box whose pairs are routed
// tb-compatibly leaves the top->bottom through route open; lr-compatibly the
// left->right one. Paths are ordered (v1,u1)..(v4,u4).
std::array<Path, 4> box_internal_paths(const BoxHandles& b, bool tb_compatible);

// Canonical through traversals of one routing box, stub to stub.
Path box_through_tb(const BoxHandles& b);
Path box_through_lr(const BoxHandles& b);

}  // namespace updp
