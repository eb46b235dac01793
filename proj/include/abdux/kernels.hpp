//
// Copyright (c) 2026 The abdux authors
//
// This file is part of abdux. Released under the MIT License; see LICENSE.
//
#pragma once

#include "abdux/exec.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace abdux::kernels {

/// out[i] = pred(i) for every i < n. `pred` must be thread-safe when
/// `exec` is parallel. Exceptions thrown by `pred` are rethrown here.
std::vector<char> check_all(std::size_t n, const std::function<bool(std::size_t)>& pred, Exec exec);

/// Smallest i < n with pred(i), or n. The parallel path evaluates blocks
/// of `block` indices at a time and never reports a later index when an
/// earlier one matches.
std::size_t find_first(std::size_t n, const std::function<bool(std::size_t)>& pred, Exec exec,
                       std::size_t block = 256);

/// Truth assignments: bit v-1 of the mask is the value of variable v.
/// Returns the smallest mask in [0, 2^bits) satisfying `pred`, or 2^bits.
std::uint64_t first_assignment(unsigned bits, const std::function<bool(std::uint64_t)>& pred, Exec exec);

} // namespace abdux::kernels
