#pragma once

#include <cstdint>

namespace sqgda {

/// Execution policy for the data-parallel kernels. Serial is the reference
/// path kept for testing and benchmarking; OpenMP is the production path.
/// Both produce bit-identical results because every parallel work item owns
/// its random substream and writes a disjoint output slice.
enum class ExecPolicy { Serial, OpenMP };

/// Number of threads parallel loops may use. Defaults to the OpenMP limit,
/// capped by the ENSF_DA_THREADS environment variable when set.
int thread_budget();
void set_thread_budget(int threads);  // 0 restores the default

namespace detail {
void parallel_for_impl(ExecPolicy exec, std::int64_t n, void* ctx,
                       void (*fn)(void*, std::int64_t));
}

/// Runs fn(i) for i in [0, n). Iterations must be independent.
template <class F>
void parallel_for(ExecPolicy exec, std::int64_t n, F&& fn) {
  detail::parallel_for_impl(exec, n, &fn, [](void* ctx, std::int64_t i) {
    (*static_cast<F*>(ctx))(i);
  });
}

}  // namespace sqgda
