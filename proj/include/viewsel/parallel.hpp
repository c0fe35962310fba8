#ifndef VIEWSEL_PARALLEL_HPP
#define VIEWSEL_PARALLEL_HPP

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace viewsel {

// Worker count: explicit argument wins, then VIEWSEL_THREADS, then hardware.
// 0 means auto.
inline int resolve_threads(int requested = 0) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("VIEWSEL_THREADS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc > 0 ? static_cast<int>(hc) : 1;
}

// Runs fn(i) for i in [0, n). Results must be written to preallocated,
// index-addressed storage inside fn so that the outcome is identical for
// any thread count.
inline void parallel_for(int n, const std::function<void(int)>& fn, int threads = 0) {
    int workers = resolve_threads(threads);
    if (workers <= 1 || n <= 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    if (workers > n) workers = n;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w]() {
            for (int i = w; i < n; i += workers) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

} // namespace viewsel

#endif
