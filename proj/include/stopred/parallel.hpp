#ifndef STOPRED_PARALLEL_HPP
#define STOPRED_PARALLEL_HPP

#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace stopred {

/// Worker count: STOPRED_THREADS if set, otherwise the hardware parallelism.
inline unsigned parallel_degree() {
    if (const char* env = std::getenv("STOPRED_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return unsigned(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

/// Runs fn(task_index) over [0, task_count) on a shared atomic work queue.
/// Results must be merged by the caller in a schedule-independent way.
inline void parallel_tasks(std::size_t task_count, const std::function<void(std::size_t)>& fn,
                           unsigned threads = 0) {
    if (threads == 0) threads = parallel_degree();
    if (threads <= 1 || task_count <= 1) {
        for (std::size_t t = 0; t < task_count; ++t) fn(t);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            std::size_t t = next.fetch_add(1);
            if (t >= task_count) return;
            fn(t);
        }
    };
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
}

}  // namespace stopred

#endif
