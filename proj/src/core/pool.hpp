#ifndef HCENSUS_POOL_HPP
#define HCENSUS_POOL_HPP

#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace hc {

// Runs fn(part) for part = 0..parts-1 on up to `workers` threads.  The
// partition layout is fixed by the caller, so totals reduced in part order
// do not depend on the worker count.
inline void parallel_parts(size_t parts, unsigned workers,
                           const std::function<void(size_t)>& fn)
{
    if (workers <= 1 || parts <= 1) {
        for (size_t p = 0; p < parts; ++p)
            fn(p);
        return;
    }
    unsigned nthreads = std::min<size_t>(workers, parts);
    std::atomic<size_t> next{0};
    std::mutex err_mutex;
    std::exception_ptr err;
    auto body = [&]() {
        for (;;) {
            size_t p = next.fetch_add(1);
            if (p >= parts)
                return;
            try {
                fn(p);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mutex);
                if (!err)
                    err = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> threads;
    threads.reserve(nthreads);
    for (unsigned i = 0; i < nthreads; ++i)
        threads.emplace_back(body);
    for (auto& t : threads)
        t.join();
    if (err)
        std::rethrow_exception(err);
}

} // namespace hc

#endif
