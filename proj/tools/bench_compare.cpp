// Compares the serial reference implementations against their OpenMP
// counterparts on representative workloads and prints a timing table.

#include <chrono>
#include <cstdio>

#include <omp.h>

#include "../tests/support.hpp"
#include "updp/dimacs.hpp"
#include "updp/reduction.hpp"
#include "updp/solver.hpp"

using namespace updp;

namespace {

template <typename F>
double time_ms(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main() {
  printf("threads available: %d\n\n", omp_get_max_threads());

  printf("%-34s %12s %12s %9s\n", "workload", "serial ms", "parallel ms", "speedup");

  for (int k = 5; k <= 8; ++k) {
    Instance inst = testsupport::reversal_lattice(k, k + 4, 2 * (k + 4));
    SolveOptions serial, par;
    par.parallel = true;
    serial.max_k = par.max_k = 12;
    SolveOutcome a, b;
    double ts = time_ms([&] { a = solve(inst, serial); });
    double tp = time_ms([&] { b = solve(inst, par); });
    if (a.status != b.status) {
      printf("MISMATCH on k=%d\n", k);
      return 1;
    }
    char name[64];
    snprintf(name, sizeof name, "solve, all %d! orders fail (n=%d)", k, inst.drawing.n());
    printf("%-34s %12.1f %12.1f %8.2fx\n", name, ts, tp, ts / tp);
  }

  Cnf cnf = parse_dimacs("p cnf 3 3\n1 2 3 0\n-1 -2 -3 0\n1 -2 3 0\n");
  ReductionOutput out = reduce(cnf);
  Report ra, rb;
  double ts = time_ms([&] { ra = validate_drawing(out.instance.drawing, false); });
  double tp = time_ms([&] { rb = validate_drawing(out.instance.drawing, true); });
  if (ra.to_string() != rb.to_string()) {
    printf("MISMATCH in validator reports\n");
    return 1;
  }
  char name[64];
  snprintf(name, sizeof name, "validate reduction (V=%d E=%zu)", out.instance.drawing.n(),
           out.instance.drawing.m());
  printf("%-34s %12.1f %12.1f %8.2fx\n", name, ts, tp, ts / tp);
  return 0;
}
