#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace mor {

/// Runs body(i) for i in [0, n) on up to hardware_concurrency threads. Callers write results into
/// pre-sized slots indexed by i, so output order never depends on scheduling. If any call throws,
/// the exception from the smallest failing index is rethrown after all workers finish.
template <class Body>
void parallel_for(std::size_t n, Body&& body, unsigned max_threads = 0)
{
    unsigned threads = max_threads != 0 ? max_threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
    if (threads <= 1) {
        for (std::size_t i = 0; i < n; ++i)
            body(i);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(n);
    auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
            try {
                body(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back(worker);
    }
    for (const auto& error : errors)
        if (error)
            std::rethrow_exception(error);
}

} // namespace mor
