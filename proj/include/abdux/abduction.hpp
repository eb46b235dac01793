//
// Copyright (c) 2026 The abdux authors
//
// This file is part of abdux. Released under the MIT License; see LICENSE.
//
#pragma once

#include "abdux/core.hpp"
#include "abdux/exec.hpp"
#include "abdux/semantics.hpp"

#include <optional>
#include <string>
#include <vector>

namespace abdux {

/// Ordered from strongest to weakest: every type-A explanation is a type-B
/// explanation, and so on down to D.
enum class AgreementType : unsigned char { A, B, C, D };

inline constexpr AgreementType all_agreement_types[] = {AgreementType::A, AgreementType::B, AgreementType::C,
                                                        AgreementType::D};

char to_char(AgreementType t);
/// Accepts "A".."D" (either case); throws ValidationError otherwise.
AgreementType parse_agreement(std::string_view s);

struct SemanticsOptions {
    /// Undetermined atoms allowed in brute-force stable-model enumeration.
    std::size_t cap_atoms = 24;
    /// Type C without the requirement that some model satisfies the constraints.
    bool agreement_c_literal = false;
    /// Use the enumerator even on stratified programs.
    bool force_enumeration = false;
    Exec exec;
};

/// Truth of the four agreement conditions given, per stable model, whether
/// it satisfies the constraints and the observation.
bool agreement_holds(AgreementType t, const std::vector<std::pair<bool, bool>>& per_model, bool c_literal);

bool agrees(const std::vector<Rule>& program, const std::vector<IntegrityConstraint>& constraints,
            const Observation& o, AgreementType t, const SemanticsOptions& opts = {});

/// Grounds a theory once for many explanation checks whose add parts stay
/// within `possible_additions`. `explains` is safe to call concurrently.
class Workspace {
public:
    Workspace(const AbductiveTheory& t, const Observation& o, const AtomSet& possible_additions,
              SemanticsOptions opts = {});

    const GroundProgram& program() const noexcept { return gp_; }
    const SemanticsOptions& options() const noexcept { return opts_; }
    std::optional<int> id(const Atom& a) const { return gp_.atoms.find(a); }
    /// Ids of the abducible facts B, ascending.
    const std::vector<int>& base_facts() const noexcept { return base_; }
    bool uses_enumeration() const noexcept { return !gp_.flags.stratified || opts_.force_enumeration; }

    /// `add` and `del` are atom ids; `del` must be a subset of B and
    /// disjoint from `add` (not re-checked).
    bool explains(const std::vector<int>& add, const std::vector<int>& del, AgreementType t) const;
    /// Throws InvariantViolation if an added atom is outside the workspace.
    bool explains(const Explanation& e, AgreementType t) const;

    std::vector<int> ids_of(const AtomSet& atoms) const;

private:
    struct GroundConstraint {
        std::vector<int> pos, neg, head;
    };

    bool satisfies_constraints(const ModelBits& m) const;
    bool satisfies_observation(const ModelBits& m) const;

    SemanticsOptions opts_;
    GroundProgram gp_;
    std::vector<int> base_;
    std::vector<GroundConstraint> constraints_;
    std::vector<int> observation_;
    bool observation_possible_ = true;
};

struct Verdict {
    bool value = false;
    std::string diagnostic;
    explicit operator bool() const noexcept { return value; }
};

/// Checks disjointness, F ⊆ B, and agreement of O with (P ∪ E) \ F and C.
/// Structural failures are reported as a false verdict with a diagnostic.
Verdict is_explanation(const AbductiveTheory& t, const Observation& o, const Explanation& e, AgreementType type,
                       const SemanticsOptions& opts = {});

} // namespace abdux
