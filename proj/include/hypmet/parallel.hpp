#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace hypmet {

inline int default_thread_count() {
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Global worker cap used by the CLI's --threads flag. 0 means "hardware".
inline std::atomic<int>& thread_cap() {
    static std::atomic<int> cap{0};
    return cap;
}

inline int effective_threads(std::size_t work_items) {
    int cap = thread_cap().load();
    int n = cap > 0 ? cap : default_thread_count();
    if (static_cast<std::size_t>(n) > work_items) n = static_cast<int>(work_items);
    return n < 1 ? 1 : n;
}

/// Runs body(i) for i in [0,n). Work is pulled in chunks from an atomic
/// counter; results must be written to per-index slots so the outcome is
/// independent of scheduling.
template <typename Body>
void parallel_for(std::size_t n, Body&& body, std::size_t chunk = 16) {
    if (n == 0) return;
    int workers = effective_threads(n);
    if (workers == 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto run = [&] {
        for (;;) {
            std::size_t begin = next.fetch_add(chunk);
            if (begin >= n) return;
            std::size_t end = std::min(begin + chunk, n);
            for (std::size_t i = begin; i < end; ++i) body(i);
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    for (int t = 0; t < workers - 1; ++t) pool.emplace_back(run);
    run();
    for (auto& th : pool) th.join();
}

} // namespace hypmet
