#pragma once

// Thread helpers for the exhaustive scans. Work is split into fixed blocks
// (or fixed seed chunks for sampled scans) so the outcome of any search is
// independent of the worker count: witnesses are merged by taking the one
// with the lowest block index, and sampled scans derive one RNG stream per
// chunk, never per thread.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace caloops {

// Process-wide worker count. Defaults to 1; the CLI raises it from the
// environment. Library code never reads the environment itself.
int worker_count();
void set_worker_count(int n);

// Runs fn(begin, end) over disjoint subranges of [0, total) on worker_count()
// threads. fn must only touch state it owns or atomics.
void parallel_for_blocks(uint64_t total,
                         const std::function<void(uint64_t, uint64_t)>& fn);

// Exhaustive search over [0, total) for the lowest index satisfying pred.
// Returns total when there is none. pred must be pure.
uint64_t parallel_find_first(uint64_t total,
                             const std::function<bool(uint64_t)>& pred);

}  // namespace caloops
