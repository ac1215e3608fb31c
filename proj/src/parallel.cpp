#include "qredux/parallel.hpp"

#include <atomic>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qredux {

namespace {

std::atomic<int> g_cap{0}; // 0 = uninitialized

int detect() {
  if (const char* env = std::getenv("QREDUX_THREADS")) {
    int n = std::atoi(env);
    if (n >= 1) return n;
  }
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

} // namespace

int max_threads() {
  int cap = g_cap.load(std::memory_order_relaxed);
  if (cap == 0) {
    cap = detect();
    g_cap.store(cap, std::memory_order_relaxed);
  }
  return cap;
}

void set_max_threads(int n) { g_cap.store(n >= 1 ? n : 1, std::memory_order_relaxed); }

} // namespace qredux
