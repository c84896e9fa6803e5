// Serial reference vs OpenMP kernels on the heavier generator families.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "edval/edcore.hpp"
#include "edval/exec.hpp"
#include "edval/sweep.hpp"
#include "edval/symcalc.hpp"

namespace {

using namespace edval;

double time_best(const std::function<void()>& fn, int reps) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    auto start = std::chrono::steady_clock::now();
    fn();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  }
  return best;
}

}  // namespace

int main() {
  struct Case {
    std::string name;
    SymbolClass cls;
  };
  const std::vector<Case> cases = {
      {"congruence nv=12 d=5", gen_congruence(12, 5, 2)},
      {"congruence nv=12 d=6", gen_congruence(12, 6, 3)},
      {"generic r=2 d=6", gen_generic(2, 6, 2, 2)},
      {"chain r=5", gen_chain(5, 2)},
  };
  std::printf("threads: %d\n", max_threads());
  std::printf("%-24s %12s %12s %8s %6s\n", "case", "serial [s]", "parallel [s]", "speedup", "rho");
  for (const auto& c : cases) {
    std::size_t rho_serial = 0, rho_parallel = 0;
    double ts = time_best([&] { rho_serial = rho(wedge_nu(c.cls, Exec::Serial), Exec::Serial); }, 3);
    double tp = time_best([&] { rho_parallel = rho(wedge_nu(c.cls, Exec::Parallel), Exec::Parallel); }, 3);
    if (rho_serial != rho_parallel) {
      std::printf("%s: serial rho %zu != parallel rho %zu\n", c.name.c_str(), rho_serial, rho_parallel);
      return 1;
    }
    std::printf("%-24s %12.4f %12.4f %8.2f %6zu\n", c.name.c_str(), ts, tp, ts / tp, rho_serial);
  }

  for (Exec exec : {Exec::Serial, Exec::Parallel}) {
    SweepOptions opts;
    opts.exec = exec;
    double t = time_best([&] { run_all_criteria(opts); }, 1);
    std::printf("acceptance sweep (%s): %.3f s\n", exec == Exec::Serial ? "serial" : "parallel", t);
  }
  return 0;
}
