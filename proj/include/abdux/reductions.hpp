//
// Copyright (c) 2026 The abdux authors
//
// This file is part of abdux. Released under the MIT License; see LICENSE.
//
#pragma once

#include "abdux/core.hpp"
#include "abdux/dimacs.hpp"
#include "abdux/exec.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace abdux {

/// Theory and observation produced from a formula. `rules` is the fixed rule
/// list of the construction (its size is checked by tests); `explanation` is
/// the distinguished explanation of the SAT constructions.
struct ReductionInstance {
    AbductiveTheory theory;
    Observation observation;
    std::optional<Explanation> explanation;
    std::vector<Rule> rules;
};

/// Reserved constants used by the generators.
namespace reserved {
inline const std::string zero = "k_0";
inline const std::string t = "k_t";
inline const std::string f = "k_f";
std::string clause(std::size_t i); // k_c<i>, 1-based
} // namespace reserved

/// Variable names in generated theories: x<v> for existential, y<v> otherwise.
std::string variable_name(int v, bool existential = false);

/// Bit v-1 of `assignment` is the value of variable v.
bool eval_cnf(const std::vector<Clause>& clauses, std::uint64_t assignment);
bool eval_dnf(const std::vector<Clause>& terms, std::uint64_t assignment);

/// Clauses of the negation of a DNF: every term becomes the clause of its
/// negated literals.
std::vector<Clause> negate_dnf(const std::vector<Clause>& terms);

/// Exhaustive; CapExceeded above 20 variables.
bool sat_bruteforce(const Cnf& cnf, Exec exec = {});
bool qbf_bruteforce(const Qbf& q, Exec exec = {});

/// CNF F whose all-false assignment is not a model. U is always an
/// explanation of goal; it is constrained iff F is unsatisfiable.
ReductionInstance gen_thm4_sat(const Cnf& cnf);
/// exists X forall Y G, G a DNF whose all-false Y-assignment satisfies G
/// under every X-assignment. A constrained explanation exists iff the
/// formula is true.
ReductionInstance gen_thm4_qbf(const Qbf& q);
/// Horn, recursive. Needs at least one clause. The explanation is
/// constrained iff F is unsatisfiable.
ReductionInstance gen_thm5_sat(const Cnf& cnf);
/// Horn, recursive; same input conditions as gen_thm4_qbf.
ReductionInstance gen_thm5_qbf(const Qbf& q);
/// Non-recursive Horn with two integrity constraints. The explanation is
/// constrained iff F is unsatisfiable.
ReductionInstance gen_thm6_sat(const Cnf& cnf);

} // namespace abdux
