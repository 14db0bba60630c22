#pragma once

#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace dpc {

// Splits [0, size) into at most `threads` contiguous chunks and runs
// fn(begin, end) on each. Serial when threads <= 1. The first exception
// thrown by any chunk is rethrown.
inline void parallel_ranges(std::uint64_t size, int threads,
                            const std::function<void(std::uint64_t, std::uint64_t)>& fn) {
    if (threads < 1) threads = 1;
    if (threads == 1 || size < 2) {
        fn(0, size);
        return;
    }
    std::uint64_t chunk = (size + threads - 1) / threads;
    std::vector<std::thread> pool;
    std::exception_ptr err;
    std::mutex err_mu;
    for (int t = 0; t < threads; ++t) {
        std::uint64_t lo = std::min<std::uint64_t>(size, t * chunk);
        std::uint64_t hi = std::min<std::uint64_t>(size, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&, lo, hi] {
            try {
                fn(lo, hi);
            } catch (...) {
                std::lock_guard<std::mutex> g(err_mu);
                if (!err) err = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
}

}  // namespace dpc
