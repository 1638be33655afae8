#pragma once

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace semitoric::par {

/// Worker count: SEMITORIC_THREADS when set, hardware concurrency otherwise.
inline int n_threads() {
    if (const char* env = std::getenv("SEMITORIC_THREADS")) {
        const int n = std::atoi(env);
        if (n >= 1) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Strided parallel loop; the body must write only to its own index.  The
/// first exception thrown by a worker is rethrown on the calling thread.
template <typename F>
void parallel_for(long n, F&& body) {
    const long nt = std::min<long>(n_threads(), std::max<long>(1, n));
    if (nt == 1) {
        for (long i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(nt);
    pool.reserve(nt);
    for (long w = 0; w < nt; ++w)
        pool.emplace_back([=, &body, &errors] {
            try {
                for (long i = w; i < n; i += nt) body(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace semitoric::par
