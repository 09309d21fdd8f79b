#pragma once

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

namespace bohrgap::detail {

inline unsigned resolve_threads(unsigned requested) {
    if (requested != 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : std::min(hw, 8u);
}

// Runs fn(block_index, lo, hi) over consecutive blocks of [first, last]
// (inclusive bounds). Workers pull blocks from an atomic counter, so any
// scheduling produces the same per-block results; callers merge by index.
template <typename Fn>
void for_blocks(unsigned long first, unsigned long last, unsigned long block_size,
                unsigned threads, Fn&& fn) {
    if (first > last) return;
    unsigned long count = (last - first) / block_size + 1;
    std::atomic<unsigned long> next{0};
    auto worker = [&] {
        for (;;) {
            unsigned long b = next.fetch_add(1);
            if (b >= count) return;
            unsigned long lo = first + b * block_size;
            unsigned long hi = std::min(last, lo + block_size - 1);
            fn(b, lo, hi);
        }
    };
    unsigned n_threads = std::min<unsigned long>(resolve_threads(threads), count);
    if (n_threads <= 1) {
        worker();
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (unsigned i = 0; i < n_threads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
}

} // namespace bohrgap::detail
