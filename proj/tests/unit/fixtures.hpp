//
// Copyright (c) 2026 The abdux authors
//
// This file is part of abdux. Released under the MIT License; see LICENSE.
//
#pragma once

#include "abdux/parser.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace fixtures {

inline std::string slurp(const std::string& name) {
    std::ifstream in(std::string(ABDUX_TUTORIAL_DIR) + "/" + name);
    if (!in) throw std::runtime_error("missing tutorial file " + name);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Example {
    abdux::AbductiveTheory theory;
    abdux::Observation observation;
};

inline Example load(const std::string& stem) {
    return {abdux::parse_theory(slurp(stem + ".abd"), stem + ".abd"),
            abdux::parse_observation(slurp(stem + ".obs"), stem + ".obs")};
}

inline abdux::Explanation explanation(const std::string& stem) {
    return abdux::parse_explanation(slurp(stem + ".exp"), stem + ".exp");
}

inline abdux::AtomSet atoms(const std::string& text) { return abdux::parse_observation(text).atoms; }

} // namespace fixtures
