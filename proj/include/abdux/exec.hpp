//
// Copyright (c) 2026 The abdux authors
//
// This file is part of abdux. Released under the MIT License; see LICENSE.
//
#pragma once

namespace abdux {

/// How independent checks are scheduled. `serial` is the reference path;
/// `parallel` uses OpenMP with `jobs` threads (0 = runtime default).
/// Both produce identical results in identical order.
struct Exec {
    enum class Mode : unsigned char { serial, parallel };
    Mode mode = Mode::serial;
    int jobs = 0;

    static Exec serial() { return {}; }
    static Exec parallel(int jobs = 0) { return {Mode::parallel, jobs}; }
    bool is_parallel() const noexcept { return mode == Mode::parallel; }
};

} // namespace abdux
