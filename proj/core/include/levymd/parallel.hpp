#pragma once

#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace levymd {

// Worker count: LEVYMD_THREADS if set and positive, else the hardware hint.
[[nodiscard]] inline unsigned default_thread_count() {
    if (const char* env = std::getenv("LEVYMD_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

// Runs fn(block_index, begin, end) over [0, n) split into fixed-size blocks.
// Block boundaries depend only on n and block_size, never on the thread
// count, so per-block results (and any reduction over them in block order)
// are reproducible across 1..k threads.
template <typename Fn>
void parallel_blocks(std::size_t n, std::size_t block_size, unsigned threads, Fn&& fn) {
    if (n == 0) return;
    if (block_size == 0) block_size = 1;
    const std::size_t nblocks = (n + block_size - 1) / block_size;
    if (threads <= 1 || nblocks == 1) {
        for (std::size_t b = 0; b < nblocks; ++b) {
            fn(b, b * block_size, std::min(n, (b + 1) * block_size));
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t b = next.fetch_add(1, std::memory_order_relaxed);
            if (b >= nblocks) return;
            fn(b, b * block_size, std::min(n, (b + 1) * block_size));
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
}

}  // namespace levymd
