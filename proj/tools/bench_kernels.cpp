// Times the parallel kernels against the serial reference path. The grid
// loops all go through run_indexed, so pinning the worker count to 1 gives
// the serial baseline and the hardware default gives the parallel number.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "qi/core.hpp"
#include "qi/cv.hpp"
#include "qi/discrete_ps.hpp"
#include "qi/fermion.hpp"
#include "qi/lmg.hpp"

namespace {

double time_once(const std::function<void()>& fn) {
  auto t0 = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Case {
  std::string name;
  std::function<void()> fn;
};

}  // namespace

int main() {
  using namespace qi;

  FockState cat = cat_state(2.0);
  std::vector<Case> cases;
  cases.push_back({"cv_wigner cat(2), 161x161 grid", [&] {
                     WignerGrid g = cv_wigner(cat, 6.0, 161);
                     (void)g;
                   }});
  cases.push_back({"xy ring six-class sweep, N=1000, 96 points", [] {
                     ChainParams p;
                     p.gamma = 0.5;
                     p.convention = FieldConvention::xy_chain;
                     std::vector<double> out(96);
                     run_indexed(96, [&](std::size_t i) {
                       ChainParams q = p;
                       q.field = 0.5 + 0.01 * static_cast<double>(i);
                       SpinCorrelators sc = xy_ring_correlators(1000, q, 1);
                       out[i] = dwf_extremes(sc).w_min;
                     });
                     (void)out;
                   }});
  cases.push_back({"lmg survival series, N=1000, 2000 times", [] {
                     InitialSpec spec;
                     RVec psi0 = prepare_initial(spec, 1.5, 1000);
                     QuenchResult q = lmg_quench(psi0, 1.5, 1.2, 1000);
                     RVec l = survival_probability(q, default_time_grid());
                     (void)l;
                   }});

  std::printf("%-44s %10s %10s %8s\n", "kernel", "serial", "parallel", "speedup");
  for (const auto& c : cases) {
    set_threads(1);
    double ts = time_once(c.fn);
    set_threads(0);  // hardware default
    double tp = time_once(c.fn);
    std::printf("%-44s %9.3fs %9.3fs %7.2fx\n", c.name.c_str(), ts, tp,
                tp > 0 ? ts / tp : 0.0);
  }
  std::printf("worker threads at hardware default: %d\n", max_threads());
  return 0;
}
