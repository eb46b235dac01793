//
// Copyright (c) 2026 The abdux authors
//
// This file is part of abdux. Released under the MIT License; see LICENSE.
//
#pragma once

#include "abdux/arbitrariness.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace abdux {

struct SearchBounds {
    std::size_t max_add = 3;
    std::size_t max_del = 0;
    /// Extra fresh constants (`$0`, `$1`, ...) added to the candidate domain.
    std::size_t with_fresh = 0;
};

struct SearchOptions {
    SearchBounds bounds;
    ArbitrarinessOptions arbitrariness;
    /// Refuse searches whose candidate space is larger than this.
    std::uint64_t cap_candidates = 50'000'000;
    /// find_constrained: never take the Horn support route.
    bool enumeration_only = false;

    const SemanticsOptions& semantics() const noexcept { return arbitrariness.semantics; }
};

struct SearchStats {
    std::uint64_t candidates_checked = 0;
    std::uint64_t explanations_found = 0;
    /// The whole bounded space was examined.
    bool exhausted = false;
    double time_ms = 0;
};

struct SearchResult {
    std::optional<Explanation> explanation;
    SearchBounds bounds;
    SearchStats stats;
    /// "enumeration", "horn-supports" or "tractable".
    std::string route;
};

/// Called per explanation, in stream order; return false to stop.
using ExplanationSink = std::function<bool(const Explanation&)>;

/// Ground abducible atoms over `domain`, sorted.
AtomSet abducible_atoms(const AbductiveTheory& t, const ConstantSet& domain);

/// Candidate domain: constants of T and O plus `with_fresh` fresh constants.
ConstantSet candidate_domain(const AbductiveTheory& t, const Observation& o, std::size_t with_fresh);

/// Upper bound on the number of candidates within the bounds.
std::uint64_t candidate_count(std::size_t add_atoms, std::size_t base_facts, const SearchBounds& b);

/// Every explanation within the bounds, by nondecreasing |E|+|F|, ties
/// broken by the sorted add part and then the delete part.
SearchStats enumerate_explanations(const AbductiveTheory& t, const Observation& o, AgreementType type,
                                   const SearchOptions& opts, const ExplanationSink& sink);
std::vector<Explanation> enumerate_explanations(const AbductiveTheory& t, const Observation& o, AgreementType type,
                                                const SearchOptions& opts);

/// Every constrained explanation within the bounds, in stream order.
SearchStats enumerate_constrained(const AbductiveTheory& t, const Observation& o, AgreementType type,
                                  const SearchOptions& opts, const ExplanationSink& sink);

/// The first constrained explanation in stream order, if any.
SearchResult find_constrained(const AbductiveTheory& t, const Observation& o, AgreementType type,
                              const SearchOptions& opts);

/// Explanations of `ds` with no explanation (E', F') != (E, F), E' ⊆ E, F' ⊆ F.
std::vector<Explanation> filter_subset_minimal(const AbductiveTheory& t, const Observation& o, AgreementType type,
                                               const std::vector<Explanation>& ds, const SearchOptions& opts = {});

/// Explanations of `ds` of minimum size, provided no smaller explanation
/// exists at all; empty otherwise.
std::vector<Explanation> filter_card_minimal(const AbductiveTheory& t, const Observation& o, AgreementType type,
                                             const std::vector<Explanation>& ds, const SearchOptions& opts = {});

struct RankedExplanation {
    Explanation explanation;
    std::size_t degree = 0;
};

/// Sorted by degree, then by the enumeration order.
std::vector<RankedExplanation> rank_by_arbitrariness(const AbductiveTheory& t, const Observation& o,
                                                     AgreementType type, const std::vector<Explanation>& ds,
                                                     const SearchOptions& opts = {});

/// Upper bound on the abducible facts used by any proof of the observation
/// in a non-recursive program.
std::size_t tractable_bound(const AbductiveTheory& t, const Observation& o);

/// Constrained-explanation search for non-recursive Horn theories without
/// integrity constraints (PreconditionError otherwise). Looks only at
/// explanations with an empty delete part and at most `tractable_bound`
/// added atoms; polynomial in the number of facts.
SearchResult find_constrained_tractable(const AbductiveTheory& t, const Observation& o,
                                        const ArbitrarinessOptions& opts = {});

} // namespace abdux
