//
// Copyright (c) 2026 The abdux authors
//
// This file is part of abdux. Released under the MIT License; see LICENSE.
//
#pragma once

#include "abdux/parser.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace abdux {

/// Literals are DIMACS-style signed variable indices (1-based).
using Clause = std::vector<int>;

/// CNF over variables y1..yn.
struct Cnf {
    int num_vars = 0;
    std::vector<Clause> clauses;
    bool operator==(const Cnf&) const = default;
};

/// exists X forall Y. matrix. The matrix is a CNF (`p cnf`) or, with the
/// `p dnf` header, a DNF whose lines are terms. Unquantified variables are
/// existential (they join X).
struct Qbf {
    enum class Matrix : unsigned char { cnf, dnf };
    int num_vars = 0;
    std::vector<int> exists;
    std::vector<int> forall;
    Matrix form = Matrix::cnf;
    std::vector<Clause> matrix;
    bool operator==(const Qbf&) const = default;
};

Cnf parse_dimacs(std::string_view text, const std::string& file = "<cnf>");
Qbf parse_qdimacs(std::string_view text, const std::string& file = "<qbf>");

std::string print_dimacs(const Cnf& cnf);
std::string print_qdimacs(const Qbf& qbf);

} // namespace abdux
