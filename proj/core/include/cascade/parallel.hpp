#pragma once

#include <cstddef>
#include <functional>

namespace cascade {

/// Number of worker threads, taken from the CASCADE_THREADS environment
/// variable (default 1).  Values below 1 are clamped to 1.
int thread_count();

/// Runs fn(i) for i in [0, n).  Work is split into contiguous index blocks,
/// one per thread; callers must only write to per-index slots so results do
/// not depend on the thread count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace cascade
