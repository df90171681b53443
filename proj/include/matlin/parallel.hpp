#ifndef MATLIN_PARALLEL_HPP
#define MATLIN_PARALLEL_HPP

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace matlin {

/// Worker count used when the caller passes 0: the hardware concurrency,
/// at least 1.
std::size_t default_jobs();

/// Evaluates fn(i) for i in [0, count) on up to `jobs` threads and returns
/// the results in index order, so output never depends on scheduling.
/// The first exception thrown by any call is rethrown after all workers
/// have stopped.
template <typename T, typename Fn>
std::vector<T> parallel_map(std::size_t count, std::size_t jobs, Fn&& fn) {
    std::vector<T> out(count);
    if (jobs == 0) jobs = default_jobs();
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        while (!failed.load(std::memory_order_relaxed)) {
            const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= count) return;
            try {
                out[i] = fn(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
                failed = true;
            }
        }
    };
    const std::size_t n_threads = jobs < count ? jobs : count;
    std::vector<std::thread> threads;
    threads.reserve(n_threads);
    for (std::size_t t = 0; t < n_threads; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
    if (error) std::rethrow_exception(error);
    return out;
}

}  // namespace matlin

#endif
