#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace aqt {

/// Worker count: AQT_THREADS when set, otherwise the machine parallelism.
inline int thread_count() {
    if (const char* s = std::getenv("AQT_THREADS")) {
        const int v = std::atoi(s);
        if (v >= 1) return v;
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
}

/// Splits [0, count) into per-thread chunks, runs chunk_fn(lo, hi) on each,
/// and merges the partial results in chunk order. The merge order is fixed,
/// so the result is independent of the schedule.
template <typename T, typename ChunkFn, typename MergeFn>
T parallel_map_reduce(size_t count, ChunkFn&& chunk_fn, MergeFn&& merge) {
    const size_t workers =
        std::min<size_t>(static_cast<size_t>(thread_count()), count ? count : 1);
    if (workers <= 1) return chunk_fn(0, count);

    std::vector<T> parts(workers);
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> threads;
    threads.reserve(workers);
    const size_t step = (count + workers - 1) / workers;
    for (size_t w = 0; w < workers; ++w) {
        const size_t lo = w * step;
        const size_t hi = std::min(count, lo + step);
        threads.emplace_back([&, w, lo, hi] {
            try {
                parts[w] = chunk_fn(lo, hi);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : threads) t.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);

    T acc{};
    for (auto& p : parts) merge(acc, std::move(p));
    return acc;
}

} // namespace aqt
