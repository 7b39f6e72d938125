#pragma once

#include <atomic>
#include <thread>
#include <vector>

namespace chvatal {

inline int default_jobs() {
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

// Runs f(i) for i in [begin, end) on a bounded worker pool. Workers pull
// indices from a shared counter; f must be safe to run concurrently for
// distinct indices.
template <class F>
void parallel_for(long begin, long end, int jobs, F&& f) {
    if (end <= begin) return;
    if (jobs <= 1) {
        for (long i = begin; i < end; ++i) f(i);
        return;
    }
    std::atomic<long> next{begin};
    auto worker = [&] {
        for (;;) {
            long i = next.fetch_add(1);
            if (i >= end) return;
            f(i);
        }
    };
    std::vector<std::jthread> pool;
    long span = end - begin;
    int count = jobs < span ? jobs : static_cast<int>(span);
    pool.reserve(static_cast<std::size_t>(count));
    for (int t = 0; t < count; ++t) pool.emplace_back(worker);
}

}  // namespace chvatal
