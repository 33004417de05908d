#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace fptlab {

/// Resolves a requested worker count; 0 means hardware concurrency.
inline unsigned resolve_workers(unsigned requested) noexcept
{
    if (requested != 0) return requested;
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Calls body(begin, end) for consecutive chunks of [0, n) on `workers`
/// threads. Chunks are claimed dynamically, so body must only write state
/// owned by its own index range. The first exception is rethrown.
template <class Body>
void parallel_for_chunks(std::size_t n, std::size_t chunk, unsigned workers, Body&& body)
{
    if (n == 0) return;
    chunk = std::max<std::size_t>(chunk, 1);
    const std::size_t n_chunks = (n + chunk - 1) / chunk;
    workers = static_cast<unsigned>(std::min<std::size_t>(resolve_workers(workers), n_chunks));

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (;;) {
            const std::size_t c = next.fetch_add(1);
            if (c >= n_chunks) return;
            try {
                body(c * chunk, std::min(n, (c + 1) * chunk));
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next.store(n_chunks);
                return;
            }
        }
    };
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);
}

} // namespace fptlab
