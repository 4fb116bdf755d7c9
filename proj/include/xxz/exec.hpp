#pragma once

#include <cstddef>
#include <exception>
#include <mutex>

namespace xxz {

// Every parallel kernel has a serial twin selected by this flag; the serial
// path is the reference the tests compare against.
enum class Exec { serial, parallel };

int worker_count();

// Runs f(i) for i in [0, n). Exceptions thrown by workers are rethrown on the
// calling thread (the first one wins).
template <class F>
void for_each_index(Exec exec, std::size_t n, F&& f) {
    if (exec == Exec::serial || n < 2) {
        for (std::size_t i = 0; i < n; ++i) f(i);
        return;
    }
    std::exception_ptr failure;
    std::mutex guard;
    const long count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i) {
        try {
            f(static_cast<std::size_t>(i));
        } catch (...) {
            std::lock_guard<std::mutex> lock(guard);
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
}

}  // namespace xxz
