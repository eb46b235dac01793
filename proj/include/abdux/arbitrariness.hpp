//
// Copyright (c) 2026 The abdux authors
//
// This file is part of abdux. Released under the MIT License; see LICENSE.
//
#pragma once

#include "abdux/abduction.hpp"
#include "abdux/core.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

namespace abdux {

/// f_{E,C}: rewrites the occurrences in C, all of which refer to `target`.
struct ReplacementFunction {
    Constant target;
    std::set<Occurrence> occurrences;
    auto operator<=>(const ReplacementFunction&) const = default;
};

std::set<Occurrence> occurrences(const AtomSet& e, const Constant& c);
/// Every occurrence of every constant in `e`, in atom order then position.
std::vector<Occurrence> all_occurrences(const AtomSet& e);

/// Throws ValidationError if an occurrence is not in `e` or does not refer
/// to the target constant.
AtomSet apply_replacement(const ReplacementFunction& f, const AtomSet& e, const Constant& x);

bool independent(const ReplacementFunction& f1, const ReplacementFunction& f2);

struct ArbitrarinessOptions {
    SemanticsOptions semantics;
    /// Total occurrences in E above which subset enumeration is refused.
    std::size_t cap_occurrences = 20;
    /// Replacement constant; must not occur in T, O or E. Defaults to the
    /// lowest fresh constant.
    std::optional<Constant> xi;
};

/// The constant substituted by replacement functions for (T, O, E).
Constant replacement_constant(const AbductiveTheory& t, const Observation& o, const AtomSet& e);

/// Replacement functions whose image is still an explanation, ordered by
/// constant then occurrence set. Throws PreconditionError if `d` is not an
/// explanation and CapExceeded above the occurrence cap.
std::vector<ReplacementFunction> valid_replacements(const AbductiveTheory& t, const Observation& o,
                                                    const Explanation& d, AgreementType type,
                                                    const ArbitrarinessOptions& opts = {});

/// Maximum number of pairwise independent valid replacement functions.
std::size_t degree(const AbductiveTheory& t, const Observation& o, const Explanation& d, AgreementType type,
                   const ArbitrarinessOptions& opts = {});

/// degree == 0, without computing the packing.
bool is_constrained(const AbductiveTheory& t, const Observation& o, const Explanation& d, AgreementType type,
                    const ArbitrarinessOptions& opts = {});

/// Largest number of pairwise disjoint members of `family` (bit masks over
/// at most 32 elements).
std::size_t max_disjoint_packing(const std::vector<std::uint32_t>& family);

/// Degree from a list of valid replacement functions: the per-constant
/// maximum packings, summed.
std::size_t degree_of(const std::vector<ReplacementFunction>& valid);

} // namespace abdux
