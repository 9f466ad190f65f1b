#pragma once

#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <utility>
#include <vector>

namespace pubsim {

/// Run fn(i) for i in [0, n) across up to `workers` threads. Work items
/// must be independent and write only to their own slots; chunks are
/// claimed through an atomic counter, so scheduling never affects results.
/// The first exception thrown by any worker is rethrown on the caller.
template <typename F>
void parallel_for(long n, int workers, F&& fn) {
    if (n <= 0) {
        return;
    }
    if (workers <= 1 || n == 1) {
        for (long i = 0; i < n; ++i) {
            fn(i);
        }
        return;
    }

    const long chunk = 64;
    std::atomic<long> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;

    auto worker = [&] {
        while (true) {
            const long begin = next.fetch_add(chunk, std::memory_order_relaxed);
            if (begin >= n) {
                return;
            }
            const long end = begin + chunk < n ? begin + chunk : n;
            try {
                for (long i = begin; i < end; ++i) {
                    fn(i);
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) {
                    error = std::current_exception();
                }
                return;
            }
        }
    };

    const int thread_count =
        static_cast<int>(std::min<long>(workers, (n + chunk - 1) / chunk));
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(thread_count));
    for (int t = 0; t < thread_count; ++t) {
        threads.emplace_back(worker);
    }
    for (auto& t : threads) {
        t.join();
    }
    if (error) {
        std::rethrow_exception(error);
    }
}

} // namespace pubsim
