#pragma once

#include <cstddef>
#include <functional>

namespace leibniz {

/// Number of worker threads to use, from the LEIBNIZ_LAB_THREADS environment
/// variable when set (clamped to [1, hardware_concurrency]), otherwise the
/// hardware concurrency (at least 1).
std::size_t thread_budget();

/// Runs body(begin..end) partitioned into contiguous per-thread blocks.
/// Each worker receives (block_begin, block_end, worker_index); the number of
/// workers is min(thread_budget(), end - begin). Callers must make the final
/// result independent of the partitioning (e.g. merge per-worker results in
/// worker order) so answers never depend on the thread budget.
void parallel_blocks(
    std::size_t begin, std::size_t end,
    const std::function<void(std::size_t, std::size_t, std::size_t)>& body);

}  // namespace leibniz
