#pragma once

#include <cstddef>
#include <functional>

namespace overalg {

// Thread cap from OVERALG_THREADS (0 or unset = hardware concurrency).
int max_threads();

// Runs fn(i) for i in [0, n), possibly across threads. Callers keep results
// in per-index slots and reduce sequentially afterwards, so the outcome is
// independent of the parallelism degree.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace overalg
