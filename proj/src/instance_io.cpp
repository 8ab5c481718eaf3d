#include "updp/instance_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace updp {

Instance parse_instance(const std::string& text) {
  DrawingBuilder db;
  std::map<VertexId, int> declared;  // id -> declaring line
  std::vector<std::pair<VertexId, VertexId>> pairs;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string kind;
    if (!(ls >> kind)) continue;
    auto want_id = [&](const char* what) {
      long long v;
      if (!(ls >> v) || v < 0) throw ParseError(lineno, std::string("expected ") + what);
      return v;
    };
    auto want_declared = [&](const char* what) {
      long long v = want_id(what);
      if (!declared.count(v))
        throw ParseError(lineno, "undeclared vertex " + std::to_string(v));
      return v;
    };
    if (kind == "v") {
      long long id = want_id("vertex id");
      std::string xs, ys;
      if (!(ls >> xs >> ys)) throw ParseError(lineno, "expected coordinates");
      Rat x, y;
      try {
        x = rat_from_string(xs);
        y = rat_from_string(ys);
      } catch (const std::invalid_argument& e) {
        throw ParseError(lineno, e.what());
      }
      if (declared.count(id))
        throw ParseError(lineno, "vertex " + std::to_string(id) + " already declared on line " +
                                     std::to_string(declared[id]));
      declared[id] = lineno;
      db.vertex(id, Point{x, y});
    } else if (kind == "e") {
      long long u = want_declared("edge tail");
      long long v = want_declared("edge head");
      db.edge(u, v);
    } else if (kind == "p") {
      long long s = want_declared("pair source");
      long long t = want_declared("pair target");
      pairs.emplace_back(s, t);
    } else {
      throw ParseError(lineno, "unknown record '" + kind + "'");
    }
    std::string extra;
    if (ls >> extra) throw ParseError(lineno, "trailing tokens: '" + extra + "'");
  }
  Instance inst;
  inst.drawing = db.build();
  inst.pairs.reserve(pairs.size());
  for (const auto& [s, t] : pairs)
    inst.pairs.emplace_back(inst.drawing.index_of(s), inst.drawing.index_of(t));
  return inst;
}

std::string serialize_instance(const Instance& inst) {
  const Drawing& d = inst.drawing;
  std::ostringstream os;
  for (int v = 0; v < d.n(); ++v)
    os << "v " << d.id[v] << ' ' << rat_to_string(d.pt[v].x) << ' ' << rat_to_string(d.pt[v].y)
       << '\n';
  std::vector<std::pair<VertexId, VertexId>> es;
  es.reserve(d.edges.size());
  for (const auto& [u, v] : d.edges) es.emplace_back(d.id[u], d.id[v]);
  std::sort(es.begin(), es.end());
  for (const auto& [u, v] : es) os << "e " << u << ' ' << v << '\n';
  for (const auto& [s, t] : inst.pairs) os << "p " << d.id[s] << ' ' << d.id[t] << '\n';
  return os.str();
}

Instance load_instance_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_instance(ss.str());
}

bool instances_equal(const Instance& a, const Instance& b) {
  return a.drawing.id == b.drawing.id && a.drawing.pt == b.drawing.pt &&
         a.drawing.edges == b.drawing.edges && a.pairs == b.pairs;
}

}  // namespace updp
