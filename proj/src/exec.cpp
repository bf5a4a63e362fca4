#include "sqgda/exec.hpp"

#include <omp.h>

#include <atomic>
#include <cstdlib>

namespace sqgda {

namespace {
std::atomic<int> g_thread_budget{0};

int env_thread_cap() {
  if (const char* s = std::getenv("ENSF_DA_THREADS")) {
    int v = std::atoi(s);
    if (v > 0) return v;
  }
  return 0;
}
}  // namespace

int thread_budget() {
  int t = g_thread_budget.load(std::memory_order_relaxed);
  if (t > 0) return t;
  int hw = omp_get_max_threads();
  int cap = env_thread_cap();
  return (cap > 0 && cap < hw) ? cap : hw;
}

void set_thread_budget(int threads) {
  g_thread_budget.store(threads > 0 ? threads : 0, std::memory_order_relaxed);
}

namespace detail {

void parallel_for_impl(ExecPolicy exec, std::int64_t n, void* ctx,
                       void (*fn)(void*, std::int64_t)) {
  if (exec == ExecPolicy::Serial || n < 2 || thread_budget() < 2) {
    for (std::int64_t i = 0; i < n; ++i) fn(ctx, i);
    return;
  }
  const int nt = thread_budget();
  if (n <= 256) {
    // coarse items (ensemble members, reverse-SDE trajectories)
#pragma omp parallel for schedule(dynamic, 1) num_threads(nt)
    for (std::int64_t i = 0; i < n; ++i) fn(ctx, i);
  } else {
    // fine items (grid points)
#pragma omp parallel for schedule(dynamic, 64) num_threads(nt)
    for (std::int64_t i = 0; i < n; ++i) fn(ctx, i);
  }
}

}  // namespace detail
}  // namespace sqgda
