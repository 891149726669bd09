#pragma once

#include <cstddef>
#include <functional>

namespace zitterlab {

// Hardware concurrency capped by the ZITTERLAB_THREADS environment variable;
// at least 1.
int max_threads();

// Runs fn(i) for i in [0, count) on up to `threads` workers (0 -> max_threads()).
// Indices are block-partitioned, so the assignment is deterministic.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& fn);

}  // namespace zitterlab
