#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "updp/certify.hpp"
#include "updp/dot.hpp"
#include "updp/instance_io.hpp"
#include "updp/oracle.hpp"
#include "updp/order.hpp"
#include "updp/reduction.hpp"
#include "updp/rightmost.hpp"
#include "updp/solver.hpp"

namespace {

constexpr int kExitSolved = 0;
constexpr int kExitNoSolution = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitBudget = 3;
constexpr int kExitUsage = 64;
constexpr int kExitIo = 74;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void spit(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw IoError("cannot write " + path);
  f << text;
  if (!f) throw IoError("write failed: " + path);
}

updp::Instance load_checked(const std::string& path, bool validate = true) {
  updp::Instance inst = updp::parse_instance(slurp(path));
  if (validate) {
    updp::Report rep = validate_drawing(inst.drawing);
    updp::Report rep2 = validate_instance(inst);
    if (!rep.ok() || !rep2.ok())
      throw std::invalid_argument("invalid instance:\n" + rep.to_string() + rep2.to_string());
  }
  return inst;
}

void print_solution(const updp::Instance& inst, const updp::PathSet& ps) {
  for (size_t i = 0; i < ps.size(); ++i) {
    std::cout << "path " << i << ":";
    for (int v : ps[i].v) std::cout << ' ' << inst.drawing.id[v];
    std::cout << '\n';
  }
}

// accepts both bare "v v v" lines and the solve output form "path <i>: v v v"
updp::PathSet parse_paths(const updp::Instance& inst, const std::string& text) {
  updp::PathSet ps;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (auto colon = line.find(':'); colon != std::string::npos && line.rfind("path", 0) == 0)
      line.erase(0, colon + 1);
    std::istringstream ls(line);
    updp::Path p;
    long long id;
    while (ls >> id) {
      int v = inst.drawing.index_of(id);
      if (v < 0)
        throw std::invalid_argument("paths file line " + std::to_string(lineno) +
                                    ": unknown vertex " + std::to_string(id));
      p.v.push_back(v);
    }
    if (!p.v.empty()) ps.push_back(std::move(p));
  }
  return ps;
}

double wall_ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

int cmd_validate(const std::string& path) {
  updp::Instance inst = updp::parse_instance(slurp(path));
  updp::Report rep = validate_drawing(inst.drawing);
  updp::Report rep2 = validate_instance(inst);
  if (rep.ok() && rep2.ok()) {
    std::cout << "ok\n";
    return kExitSolved;
  }
  std::cout << rep.to_string() << rep2.to_string();
  return kExitInvalid;
}

int cmd_solve(const std::string& path, bool oracle, int max_k, bool parallel, long long budget,
              const std::string& report_file) {
  auto t0 = std::chrono::steady_clock::now();
  updp::Instance inst = load_checked(path);
  updp::SolveStatus status;
  updp::SolveStats stats;
  updp::PathSet solution;
  std::vector<int> perm;
  if (oracle) {
    updp::SolveOutcome out = updp::exact_solve(inst, {budget});
    status = out.status;
    stats = out.stats;
    solution = std::move(out.solution);
  } else {
    updp::SolveOptions opts;
    opts.parallel = parallel;
    opts.max_k = max_k;
    updp::SolveOutcome out = updp::solve(inst, opts);
    status = out.status;
    stats = out.stats;
    solution = std::move(out.solution);
    perm = std::move(out.permutation);
  }
  if (status == updp::SolveStatus::Solved) print_solution(inst, solution);
  std::cout << to_string(status) << '\n';

  if (!report_file.empty()) {
    std::ostringstream os;
    os << "command=solve\n"
       << "instance=" << path << '\n'
       << "engine=" << (oracle ? "oracle" : (parallel ? "parallel" : "serial")) << '\n'
       << "status=" << to_string(status) << '\n'
       << "k=" << inst.pairs.size() << '\n'
       << "n=" << inst.drawing.n() << '\n'
       << "m=" << inst.drawing.m() << '\n'
       << "permutations_tried=" << stats.permutations_tried << '\n'
       << "rightmost_calls=" << stats.rightmost_calls << '\n'
       << "oracle_nodes=" << stats.oracle_nodes << '\n';
    if (!perm.empty()) {
      os << "permutation=";
      for (size_t i = 0; i < perm.size(); ++i) os << (i ? " " : "") << perm[i];
      os << '\n';
    }
    os << "wall_ms=" << wall_ms_since(t0) << '\n';
    spit(report_file, os.str());
  }
  switch (status) {
    case updp::SolveStatus::Solved: return kExitSolved;
    case updp::SolveStatus::NoSolution: return kExitNoSolution;
    case updp::SolveStatus::BudgetExceeded: return kExitBudget;
  }
  return kExitInvalid;
}

int cmd_rightmost(const std::string& path, long long from, long long to) {
  updp::Instance inst = load_checked(path);
  int s = inst.drawing.index_of(from), t = inst.drawing.index_of(to);
  if (s < 0 || t < 0) throw std::invalid_argument("unknown terminal vertex");
  std::optional<updp::Path> p = updp::rightmost_path(inst.drawing, s, t);
  if (!p) {
    std::cout << "NONE\n";
    return kExitNoSolution;
  }
  std::cout << "path:";
  for (int v : p->v) std::cout << ' ' << inst.drawing.id[v];
  std::cout << '\n';
  return kExitSolved;
}

int cmd_order(const std::string& path, const std::string& paths_file, const std::string& out_file) {
  updp::Instance inst = load_checked(path);
  updp::PathSet ps = parse_paths(inst, slurp(paths_file));
  for (size_t i = 0; i < ps.size(); ++i) {
    const auto& v = ps[i].v;
    for (size_t j = 0; j + 1 < v.size(); ++j)
      if (!inst.drawing.has_edge(v[j], v[j + 1]))
        throw std::invalid_argument("path " + std::to_string(i) + " uses a non-edge");
  }
  updp::OrderClosure c = order_closure(ps, inst.drawing);
  if (!c.ok()) {
    std::cout << "cycle:";
    for (int i : c.cycle) std::cout << ' ' << i;
    std::cout << '\n';
    return kExitNoSolution;
  }
  std::string dot = hasse_dot(c);
  if (out_file.empty())
    std::cout << dot;
  else
    spit(out_file, dot);
  return kExitSolved;
}

int cmd_reduce(const std::string& cnf_path, const std::string& out_path,
               const std::string& labels_path) {
  updp::Cnf cnf = updp::parse_dimacs(slurp(cnf_path));
  updp::ReductionOutput out = updp::reduce(cnf);
  spit(out_path, serialize_instance(out.instance));
  if (!labels_path.empty()) spit(labels_path, serialize_labels(out.labels));
  std::cout << "vertices=" << out.instance.drawing.n() << " edges=" << out.instance.drawing.m()
            << " pairs=" << out.instance.pairs.size() << '\n';
  return kExitSolved;
}

int cmd_witness(const std::string& path, const std::string& labels_path, const std::string& bits) {
  updp::Instance inst = load_checked(path);
  updp::ReductionOutput out =
      updp::reconstruct_reduction(std::move(inst), updp::parse_labels(slurp(labels_path)));
  std::vector<int> beta;
  for (char ch : bits) {
    if (ch != '0' && ch != '1') throw std::invalid_argument("assignment must be a 0/1 string");
    beta.push_back(ch - '0');
  }
  if (static_cast<int>(beta.size()) != out.cnf.nvars)
    throw std::invalid_argument("assignment length " + std::to_string(beta.size()) +
                                ", formula has " + std::to_string(out.cnf.nvars) + " variables");
  std::optional<updp::PathSet> w = witness_from_assignment(out, beta);
  if (!w) {
    std::cout << "assignment does not satisfy the formula\n";
    return kExitNoSolution;
  }
  print_solution(out.instance, *w);
  return kExitSolved;
}

int cmd_gadget(const std::string& kind, const std::string& drop_s, int drop_at, int len,
               const std::string& variant_s, std::string starts_s, const std::string& out_path,
               const std::string& labels_path) {
  using updp::Drop;
  using updp::RowVariant;
  Drop drop = Drop::None;
  if (drop_s == "e+")
    drop = Drop::EPlus;
  else if (drop_s == "e-")
    drop = Drop::EMinus;
  else if (!drop_s.empty())
    throw std::invalid_argument("--drop takes e+ or e-");

  updp::Gadget g;
  if (kind == "routing") {
    g = updp::build_routing_gadget();
  } else if (kind == "crossing") {
    g = updp::build_crossing_gadget(drop);
  } else if (kind == "row") {
    RowVariant v = RowVariant::Plus;
    if (variant_s == "-")
      v = RowVariant::Minus;
    else if (!variant_s.empty() && variant_s != "+")
      throw std::invalid_argument("--variant takes + or -");
    g = updp::build_row(len, v);
  } else if (kind == "column") {
    if (starts_s.empty()) starts_s = std::string(len, '+');
    if (static_cast<int>(starts_s.size()) != len)
      throw std::invalid_argument("--starts must have one +/- per gadget");
    std::vector<RowVariant> starts;
    for (char ch : starts_s) {
      if (ch != '+' && ch != '-') throw std::invalid_argument("--starts must be a +/- string");
      starts.push_back(ch == '+' ? RowVariant::Plus : RowVariant::Minus);
    }
    std::vector<Drop> drops(len, Drop::None);
    if (drop != Drop::None) {
      if (drop_at < 1 || drop_at > len) throw std::invalid_argument("--drop-at out of range");
      drops[drop_at - 1] = drop;
    }
    g = updp::build_column(len, drops, starts);
  } else {
    throw std::invalid_argument("gadget kind must be routing, crossing, row or column");
  }
  spit(out_path, serialize_instance(g.instance));
  if (!labels_path.empty()) spit(labels_path, serialize_labels(g.labels));
  std::cout << "vertices=" << g.instance.drawing.n() << " edges=" << g.instance.drawing.m()
            << " pairs=" << g.instance.pairs.size() << '\n';
  return kExitSolved;
}

int cmd_export_dot(const std::string& path, const std::string& solution_file,
                   const std::string& out_file) {
  updp::Instance inst = load_checked(path);
  updp::PathSet ps;
  if (!solution_file.empty()) ps = parse_paths(inst, slurp(solution_file));
  std::string dot = export_dot(inst, solution_file.empty() ? nullptr : &ps);
  if (out_file.empty())
    std::cout << dot;
  else
    spit(out_file, dot);
  return kExitSolved;
}

int cmd_certify(long long budget) {
  std::vector<updp::CertCheck> checks = updp::run_certification({budget});
  long long nodes = 0;
  for (const auto& c : checks) {
    std::cout << (c.pass ? "ok   " : "FAIL ") << c.name;
    if (c.nodes) std::cout << " (nodes " << c.nodes << ")";
    if (!c.detail.empty()) std::cout << " -- " << c.detail;
    std::cout << '\n';
    nodes += c.nodes;
  }
  bool ok = all_pass(checks);
  std::cout << (ok ? "CERTIFIED" : "FAILED") << " (" << checks.size() << " checks, " << nodes
            << " oracle nodes)\n";
  return ok ? kExitSolved : kExitNoSolution;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"vertex-disjoint paths on upward planar drawings"};
  app.require_subcommand(1);

  std::string instance_path, report_file, paths_file, out_file, labels_file, cnf_path, bits;
  std::string gadget_kind, drop_s, variant_s, starts_s, solution_file;
  long long from = 0, to = 0, budget = 10'000'000;
  int max_k = 10, len = 1, drop_at = 1;
  bool oracle = false, parallel = false;

  CLI::App* validate = app.add_subcommand("validate", "check drawing and instance invariants");
  validate->add_option("instance", instance_path)->required();

  CLI::App* solve = app.add_subcommand("solve", "decide the instance");
  solve->add_option("instance", instance_path)->required();
  solve->add_flag("--oracle", oracle, "use the exact backtracking reference solver");
  solve->add_option("--max-k", max_k, "permutation guardrail (default 10)");
  solve->add_flag("--parallel", parallel, "try permutations concurrently");
  solve->add_option("--report", report_file, "write a key=value run report");
  solve->add_option("--budget", budget, "oracle node budget");

  CLI::App* rightmost = app.add_subcommand("rightmost", "print the rightmost s-t path");
  rightmost->add_option("instance", instance_path)->required();
  rightmost->add_option("--from", from)->required();
  rightmost->add_option("--to", to)->required();

  CLI::App* order = app.add_subcommand("order", "path order closure as a Hasse diagram");
  order->add_option("instance", instance_path)->required();
  order->add_option("--paths", paths_file)->required();
  order->add_option("-o", out_file);

  CLI::App* reduce = app.add_subcommand("reduce", "formula to disjoint-paths instance");
  reduce->add_option("cnf", cnf_path)->required();
  reduce->add_option("-o", out_file)->required();
  reduce->add_option("--labels", labels_file);

  CLI::App* witness = app.add_subcommand("witness", "solution from a satisfying assignment");
  witness->add_option("instance", instance_path)->required();
  witness->add_option("--labels", labels_file)->required();
  witness->add_option("--assignment", bits)->required();

  CLI::App* gadget = app.add_subcommand("gadget", "emit a standalone gadget instance");
  gadget->add_option("kind", gadget_kind)->required();
  gadget->add_option("--drop", drop_s, "remove marker edge e+ or e-");
  gadget->add_option("--drop-at", drop_at, "1-based gadget index for --drop in a column");
  gadget->add_option("--len", len, "row/column length");
  gadget->add_option("--variant", variant_s, "row entry side, + or -");
  gadget->add_option("--starts", starts_s, "column entry sides, e.g. +-+");
  gadget->add_option("-o", out_file)->required();
  gadget->add_option("--labels", labels_file);

  CLI::App* exportdot = app.add_subcommand("export-dot", "Graphviz view of an instance");
  exportdot->add_option("instance", instance_path)->required();
  exportdot->add_option("--solution", solution_file);
  exportdot->add_option("-o", out_file);

  CLI::App* certify = app.add_subcommand("certify", "oracle certification of the gadget suite");
  certify->add_option("--budget", budget, "oracle node budget per check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (validate->parsed()) return cmd_validate(instance_path);
    if (solve->parsed()) return cmd_solve(instance_path, oracle, max_k, parallel, budget, report_file);
    if (rightmost->parsed()) return cmd_rightmost(instance_path, from, to);
    if (order->parsed()) return cmd_order(instance_path, paths_file, out_file);
    if (reduce->parsed()) return cmd_reduce(cnf_path, out_file, labels_file);
    if (witness->parsed()) return cmd_witness(instance_path, labels_file, bits);
    if (gadget->parsed())
      return cmd_gadget(gadget_kind, drop_s, drop_at, len, variant_s, starts_s, out_file,
                        labels_file);
    if (exportdot->parsed()) return cmd_export_dot(instance_path, solution_file, out_file);
    if (certify->parsed()) return cmd_certify(budget);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitUsage;
}
