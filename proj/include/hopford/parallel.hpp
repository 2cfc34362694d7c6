#pragma once

#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace hopford {

/// Worker count from the HOPFORD_THREADS environment variable; 1 when unset.
inline unsigned thread_count() {
    const char* env = std::getenv("HOPFORD_THREADS");
    if (!env) return 1;
    long v = std::strtol(env, nullptr, 10);
    if (v < 1) return 1;
    if (v > 64) return 64;
    return static_cast<unsigned>(v);
}

/// Run fn(i) for i in [0, n), splitting across threads. fn must only write
/// to per-index slots; results are position-addressed so the outcome does
/// not depend on the schedule.
inline void parallel_for(size_t n, const std::function<void(size_t)>& fn) {
    unsigned workers = thread_count();
    if (workers <= 1 || n < 2) {
        for (size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (;;) {
                size_t i = next.fetch_add(1);
                if (i >= n) return;
                fn(i);
            }
        });
    for (auto& t : pool) t.join();
}

}  // namespace hopford
