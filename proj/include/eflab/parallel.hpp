#pragma once

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace eflab {

// Worker cap: hardware concurrency clamped by EF_LAB_THREADS when set.
inline unsigned thread_count() {
    unsigned n = std::thread::hardware_concurrency();
    if (n == 0) n = 1;
    if (const char* env = std::getenv("EF_LAB_THREADS")) {
        long cap = std::strtol(env, nullptr, 10);
        if (cap >= 1 && static_cast<unsigned>(cap) < n) n = static_cast<unsigned>(cap);
    }
    return n;
}

// Runs fn(i) for i in [0, n). Work is chunked over threads; fn must be pure
// with respect to shared state (each index writes only its own slot).
// Results assembled by index, so reductions over the output are deterministic.
inline void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
    unsigned workers = std::min<std::size_t>(thread_count(), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w]() {
            for (std::size_t i = w; i < n; i += workers) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

} // namespace eflab
