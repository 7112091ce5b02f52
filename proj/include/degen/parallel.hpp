#pragma once

#include <cstddef>
#include <functional>

namespace degen {

/// Worker count: DEGEN_BERNSTEIN_THREADS when set to a positive integer,
/// otherwise the machine's hardware concurrency (at least 1).
unsigned thread_count();

/// Runs task(i) for i in [0, count) on up to `threads` workers (0 means
/// thread_count()). Tasks are claimed dynamically; callers write results
/// into per-index slots so the merged output does not depend on scheduling.
/// The first exception thrown by a task is rethrown after all workers stop.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& task,
                  unsigned threads = 0);

}  // namespace degen
