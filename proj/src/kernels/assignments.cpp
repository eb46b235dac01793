//
// Copyright (c) 2026 The abdux authors
//
// This file is part of abdux. Released under the MIT License; see LICENSE.
//
#include "abdux/kernels.hpp"

#include <omp.h>

namespace abdux::kernels {

std::uint64_t first_assignment(unsigned bits, const std::function<bool(std::uint64_t)>& pred, Exec exec) {
    const std::uint64_t total = std::uint64_t{1} << bits;
    if (!exec.is_parallel()) {
        for (std::uint64_t m = 0; m < total; ++m)
            if (pred(m)) return m;
        return total;
    }
    std::uint64_t best = total;
    const auto n = static_cast<std::int64_t>(total);
    int threads = exec.jobs > 0 ? exec.jobs : omp_get_max_threads();
#pragma omp parallel for schedule(static) reduction(min : best) num_threads(threads)
    for (std::int64_t m = 0; m < n; ++m)
        if (static_cast<std::uint64_t>(m) < best && pred(static_cast<std::uint64_t>(m)))
            best = static_cast<std::uint64_t>(m);
    return best;
}

} // namespace abdux::kernels
