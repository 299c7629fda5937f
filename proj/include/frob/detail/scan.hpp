#pragma once

// Descending search for the largest integer in [lo, hi] satisfying a
// predicate. The serial kernel stops at the first hit; the parallel kernel
// evaluates fixed-size blocks top-down and takes the block maximum, so both
// return the same value.

#include <algorithm>
#include <exception>

#include <omp.h>

#include "frob/core.hpp"

namespace frob {

enum class ScanMode { serial, parallel };

namespace detail {

struct ScanOutcome {
    integer found;     // largest hit, or lo - 1 when none
    integer evaluated; // predicate calls made
};

template <typename Pred>
ScanOutcome scan_down_serial(integer hi, integer lo, Pred&& is_hit) {
    integer evaluated = 0;
    for (integer a = hi; a >= lo; --a) {
        ++evaluated;
        if (is_hit(a))
            return {a, evaluated};
    }
    return {lo - 1, evaluated};
}

template <typename Pred>
ScanOutcome scan_down_parallel(integer hi, integer lo, Pred&& is_hit) {
    const integer block = 64 * static_cast<integer>(omp_get_max_threads());
    integer evaluated = 0;
    for (integer top = hi; top >= lo; top -= block) {
        const integer bottom = std::max(lo, top - block + 1);
        integer best = lo - 1;
        std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 4) reduction(max : best)
        for (integer a = bottom; a <= top; ++a) {
            try {
                if (is_hit(a))
                    best = std::max(best, a);
            } catch (...) {
#pragma omp critical(frob_scan_failure)
                if (!failure)
                    failure = std::current_exception();
            }
        }
        if (failure)
            std::rethrow_exception(failure);
        evaluated += top - bottom + 1;
        if (best >= lo)
            return {best, evaluated};
    }
    return {lo - 1, evaluated};
}

template <typename Pred>
ScanOutcome scan_down(integer hi, integer lo, ScanMode mode, Pred&& is_hit) {
    return mode == ScanMode::parallel ? scan_down_parallel(hi, lo, is_hit) : scan_down_serial(hi, lo, is_hit);
}

} // namespace detail
} // namespace frob
