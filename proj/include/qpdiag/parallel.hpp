// OpenMP loop wrapper that keeps exceptions from crossing the parallel
// region: the first one thrown is captured and rethrown after the join.
// Iteration-indexed writes keep results independent of the thread count.
#pragma once

#include <cstdint>
#include <exception>

namespace qpdiag::numeric {

template <typename Body>
void parallel_for_indices(std::int64_t count, Body&& body) {
    std::exception_ptr eptr = nullptr;
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < count; ++i) {
        try {
            body(i);
        } catch (...) {
#pragma omp critical
            {
                if (!eptr) eptr = std::current_exception();
            }
        }
    }
    if (eptr) std::rethrow_exception(eptr);
}

} // namespace qpdiag::numeric
