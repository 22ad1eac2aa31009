#pragma once

#include <cstddef>
#include <functional>

namespace spherekit {

/// Worker count: SPHEREKIT_THREADS if set to a positive integer, otherwise
/// the hardware concurrency (at least 1).
unsigned thread_count();

/// Calls body(i) for i in [0, count) on up to thread_count() threads in
/// contiguous blocks. Bodies must only write to per-index slots, which keeps
/// results independent of the thread count. The first exception is rethrown.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace spherekit
