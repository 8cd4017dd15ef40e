#pragma once

#include <cstddef>
#include <functional>

namespace su2q {

/// Number of worker threads: hardware concurrency capped by the SU2Q_THREADS
/// environment variable (read once). SU2Q_THREADS=1 forces serial execution.
int thread_count();

/// Runs fn(i) for i in [0, n). Each index must write only to its own output
/// slots; with that discipline results are identical for any thread count.
/// Reductions inside one index stay sequential, so outputs are deterministic.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace su2q
