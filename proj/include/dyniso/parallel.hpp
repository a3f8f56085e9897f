#ifndef DYNISO_PARALLEL_HPP
#define DYNISO_PARALLEL_HPP

#include <cstddef>
#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dyniso {

enum class ExecMode { serial, parallel };

// Runs f(i) for i in [0, n). The per-index work must only read shared state
// and write to its own slot; results are identical in both modes. Exceptions
// are captured and the first one is rethrown after the loop.
template <typename F>
void for_each_index(std::size_t n, ExecMode mode, F&& f) {
#ifdef _OPENMP
    if (mode == ExecMode::parallel && n > 1) {
        std::exception_ptr err;
#pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < static_cast<long long>(n); ++i) {
            try {
                f(static_cast<std::size_t>(i));
            } catch (...) {
#pragma omp critical(dyniso_for_each_index_err)
                if (!err) err = std::current_exception();
            }
        }
        if (err) std::rethrow_exception(err);
        return;
    }
#else
    (void)mode;
#endif
    for (std::size_t i = 0; i < n; ++i) f(i);
}

}  // namespace dyniso

#endif
