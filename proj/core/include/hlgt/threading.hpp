#pragma once

#include <functional>

namespace hlgt {

/// Worker cap: min(HLGT_THREADS, hardware concurrency). Unset or <=1 means serial.
int worker_count();

/// Runs fn(i) for i in [0, n). Work is split into contiguous index chunks so
/// callers can write results into per-index slots; the reduction order is then
/// up to the caller and stays deterministic regardless of thread count.
void parallel_for(long n, const std::function<void(long)>& fn);

}  // namespace hlgt
