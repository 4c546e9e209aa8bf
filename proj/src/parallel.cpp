#include "caloops/parallel.hpp"

namespace caloops {

namespace {
int g_workers = 1;
}

int worker_count() { return g_workers; }

void set_worker_count(int n) { g_workers = n < 1 ? 1 : n; }

void parallel_for_blocks(uint64_t total,
                         const std::function<void(uint64_t, uint64_t)>& fn) {
    int workers = g_workers;
    if (workers <= 1 || total < 2) {
        fn(0, total);
        return;
    }
    uint64_t w = static_cast<uint64_t>(workers);
    uint64_t block = (total + w - 1) / w;
    std::vector<std::thread> threads;
    for (uint64_t i = 0; i < w; ++i) {
        uint64_t begin = i * block;
        uint64_t end = std::min(total, begin + block);
        if (begin >= end) break;
        threads.emplace_back([&fn, begin, end] { fn(begin, end); });
    }
    for (auto& t : threads) t.join();
}

uint64_t parallel_find_first(uint64_t total,
                             const std::function<bool(uint64_t)>& pred) {
    if (g_workers <= 1) {
        for (uint64_t i = 0; i < total; ++i)
            if (pred(i)) return i;
        return total;
    }
    // best is a shared upper bound; each worker scans its own block in order
    // and stops early once the block start can no longer beat it.
    std::atomic<uint64_t> best{total};
    parallel_for_blocks(total, [&](uint64_t begin, uint64_t end) {
        for (uint64_t i = begin; i < end; ++i) {
            if (best.load(std::memory_order_relaxed) <= begin) return;
            if (pred(i)) {
                uint64_t cur = best.load(std::memory_order_relaxed);
                while (i < cur &&
                       !best.compare_exchange_weak(cur, i,
                                                   std::memory_order_relaxed)) {
                }
                return;
            }
        }
    });
    return best.load();
}

}  // namespace caloops
