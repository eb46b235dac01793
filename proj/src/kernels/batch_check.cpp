//
// Copyright (c) 2026 The abdux authors
//
// This file is part of abdux. Released under the MIT License; see LICENSE.
//
#include "abdux/kernels.hpp"

#include <algorithm>
#include <exception>
#include <omp.h>

namespace abdux::kernels {

namespace {

int thread_count(Exec exec) { return exec.jobs > 0 ? exec.jobs : omp_get_max_threads(); }

} // namespace

std::vector<char> check_all(std::size_t n, const std::function<bool(std::size_t)>& pred, Exec exec) {
    std::vector<char> out(n, 0);
    if (!exec.is_parallel() || n < 2) {
        for (std::size_t i = 0; i < n; ++i) out[i] = pred(i) ? 1 : 0;
        return out;
    }
    std::exception_ptr error;
    const auto total = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 16) num_threads(thread_count(exec))
    for (std::int64_t i = 0; i < total; ++i) {
        try {
            out[static_cast<std::size_t>(i)] = pred(static_cast<std::size_t>(i)) ? 1 : 0;
        } catch (...) {
#pragma omp critical(abdux_batch_error)
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);
    return out;
}

std::size_t find_first(std::size_t n, const std::function<bool(std::size_t)>& pred, Exec exec, std::size_t block) {
    if (!exec.is_parallel()) {
        for (std::size_t i = 0; i < n; ++i)
            if (pred(i)) return i;
        return n;
    }
    block = std::max<std::size_t>(block, 1);
    for (std::size_t lo = 0; lo < n; lo += block) {
        std::size_t hi = std::min(n, lo + block);
        auto hits = check_all(hi - lo, [&](std::size_t i) { return pred(lo + i); }, exec);
        auto it = std::find(hits.begin(), hits.end(), 1);
        if (it != hits.end()) return lo + static_cast<std::size_t>(it - hits.begin());
    }
    return n;
}

} // namespace abdux::kernels
