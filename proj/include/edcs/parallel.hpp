#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace edcs {

enum class Exec { Serial, OpenMP };

// Runs fn(i) for i in [0, count). Iterations must be independent: each
// writes only its own output slot and draws randomness from a child seed
// derived from i, so serial and OpenMP execution produce identical results.
template <class Fn>
void parallel_for(std::size_t count, Exec exec, Fn&& fn) {
#ifdef _OPENMP
    if (exec == Exec::OpenMP) {
#pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < static_cast<long long>(count); ++i)
            fn(static_cast<std::size_t>(i));
        return;
    }
#else
    (void)exec;
#endif
    for (std::size_t i = 0; i < count; ++i) fn(i);
}

inline int thread_count() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

} // namespace edcs
