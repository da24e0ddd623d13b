#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace qhurwitz {

/// Worker count used by parallel_for; defaults to the hardware concurrency.
int thread_count();
void set_thread_count(int n);

/// Runs body(i) for i in [0, n). Results must be written by index so the
/// outcome does not depend on scheduling. The first exception is rethrown.
template <typename Body>
void parallel_for(std::size_t n, Body body) {
    std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(thread_count()), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto run = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            try {
                body(i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next = n;
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run);
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
}

} // namespace qhurwitz
