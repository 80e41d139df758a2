#pragma once

#include <cstdint>
#include <functional>

namespace clutterlab {

/// Worker count: min(hardware_concurrency, CLUTTERLAB_THREADS if set), at least 1.
int worker_count();

/// Splits [0, total) into contiguous chunks, one worker thread per chunk.
/// fn(begin, end) must only write state owned by its index range; chunks are
/// joined before returning, so reductions in index order stay deterministic.
void parallel_for(std::uint64_t total, const std::function<void(std::uint64_t, std::uint64_t)>& fn);

}  // namespace clutterlab
