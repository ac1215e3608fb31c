// Times the OpenMP kernels against their serial reference paths.

#include "qredux/entropy.hpp"
#include "qredux/oracle.hpp"
#include "qredux/parallel.hpp"
#include "qredux/priors.hpp"
#include "qredux/qstate.hpp"
#include "qredux/zeta.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

namespace {

double time_ms(const std::function<void()>& fn, int reps) {
  using clock = std::chrono::steady_clock;
  fn(); // warm up
  auto t0 = clock::now();
  for (int i = 0; i < reps; ++i) fn();
  auto t1 = clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

void row(const std::string& name, double serial_ms, double parallel_ms) {
  std::printf("%-34s %10.2f ms %10.2f ms %8.2fx\n", name.c_str(), serial_ms, parallel_ms,
              serial_ms / parallel_ms);
}

} // namespace

int main() {
  using namespace qredux;
  std::printf("threads: %d\n", max_threads());
  std::printf("%-34s %13s %13s %9s\n", "kernel", "serial", "openmp", "speedup");

  {
    auto serial = [] { zeta::zeta_matrix(11, 0.5, Exec::Serial); };
    auto parallel = [] { zeta::zeta_matrix(11, 0.5, Exec::Parallel); };
    row("zeta dense fill n=11", time_ms(serial, 3), time_ms(parallel, 3));
  }
  {
    qstate::BlochState s{0.3, -0.2, 0.5};
    auto serial = [&] { qstate::tensor_product_matrix(s, 10, Exec::Serial); };
    auto parallel = [&] { qstate::tensor_product_matrix(s, 10, Exec::Parallel); };
    row("tensor power fill n=10", time_ms(serial, 3), time_ms(parallel, 3));
  }
  {
    auto p = priors::PriorSpec::qu(0.5);
    oracle::QuadratureSpec spec;
    spec.radial_order = 32;
    spec.theta_order = 24;
    spec.phi_order = 24;
    auto integrand = [](const qstate::BlochState& s) {
      return qstate::tensor_product_matrix(s, 4, Exec::Serial);
    };
    auto serial = [&] { oracle::ball_average(integrand, 16, p, spec, Exec::Serial); };
    auto parallel = [&] { oracle::ball_average(integrand, 16, p, spec, Exec::Parallel); };
    row("ball average n=4", time_ms(serial, 2), time_ms(parallel, 2));
  }
  return 0;
}
