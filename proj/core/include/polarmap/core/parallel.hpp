#pragma once

#include <cstddef>
#include <functional>

namespace polarmap {

/// Worker count: POLARMAP_THREADS if set (>= 1), otherwise hardware concurrency.
unsigned worker_count();

/// Calls fn(i) for i in [0, n) across worker threads. Each index is visited
/// exactly once; results must be written to per-index slots. The first
/// exception thrown by any worker is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace polarmap
