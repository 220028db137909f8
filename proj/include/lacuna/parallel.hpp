#ifndef LACUNA_PARALLEL_HPP
#define LACUNA_PARALLEL_HPP

#include <cstdlib>
#include <thread>
#include <vector>

namespace lacuna {

/// Worker cap: explicit setting, else LACUNA_THREADS, else hardware.
inline int& thread_cap() {
    static int cap = [] {
        if (const char* env = std::getenv("LACUNA_THREADS")) {
            int v = std::atoi(env);
            if (v > 0) return v;
        }
        return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    }();
    return cap;
}

/// Static block partition of [0, count); each index is processed exactly once
/// by one worker, so results never depend on the number of threads.
template <typename F>
void parallel_for(size_t count, F&& fn) {
    int workers = std::min<size_t>(thread_cap(), count ? count : 1);
    if (workers <= 1) {
        for (size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    size_t chunk = (count + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        size_t lo = w * chunk;
        size_t hi = std::min(count, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &fn] {
            for (size_t i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

} // namespace lacuna

#endif
