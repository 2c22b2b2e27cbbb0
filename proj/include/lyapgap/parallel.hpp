#pragma once

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace lyapgap {

/// Worker cap: LYAPGAP_THREADS if set, else hardware concurrency.
inline unsigned worker_count(std::size_t njobs) {
    unsigned n = std::thread::hardware_concurrency();
    if (n == 0) n = 1;
    if (const char* env = std::getenv("LYAPGAP_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) n = static_cast<unsigned>(v);
    }
    if (njobs < n) n = static_cast<unsigned>(njobs);
    return n == 0 ? 1 : n;
}

/// Runs fn(i) for i in [0, n). Work is claimed atomically, but callers must
/// write results into per-index slots and reduce in index order afterwards;
/// that keeps outputs independent of the worker count.
template <typename Fn>
void parallel_for(std::size_t n, Fn&& fn) {
    if (n == 0) return;
    unsigned workers = worker_count(n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::atomic<bool> failed{false};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= n || failed.load()) return;
                try {
                    fn(i);
                } catch (...) {
                    if (!failed.exchange(true)) error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

} // namespace lyapgap
