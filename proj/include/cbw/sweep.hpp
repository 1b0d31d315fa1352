#pragma once

// Sweep drivers. Every verification sweep is a pure function of its index,
// so ranges partition freely. The parallel driver buckets rows per index and
// flattens in index order, which makes reports identical to the serial
// reference no matter how iterations are scheduled.

#if defined(_OPENMP)
#include <omp.h>
#else
#pragma GCC diagnostic ignored "-Wunknown-pragmas"
#endif

#include <cstdint>
#include <vector>

#include "cbw/report.hpp"

namespace cbw {

enum class Exec { Serial, Parallel };

#if defined(_OPENMP)
constexpr bool have_openmp = true;
#else
constexpr bool have_openmp = false;
#endif

// Runs fn(i, rows) for every i in [lo, hi] and concatenates rows in index
// order. fn must not touch shared mutable state.
template <typename Fn>
void sweep_index(long long lo, long long hi, Exec mode, Fn&& fn,
                 std::vector<Finding>& out) {
    if (hi < lo) return;
    if (mode == Exec::Serial) {
        for (long long i = lo; i <= hi; ++i) fn(i, out);
        return;
    }
    const std::size_t count = static_cast<std::size_t>(hi - lo + 1);
    std::vector<std::vector<Finding>> buckets(count);
#pragma omp parallel for schedule(dynamic)
    for (long long i = lo; i <= hi; ++i) {
        fn(i, buckets[static_cast<std::size_t>(i - lo)]);
    }
    for (auto& b : buckets)
        for (auto& f : b) out.push_back(std::move(f));
}

} // namespace cbw
