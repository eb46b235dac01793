//
// Copyright (c) 2026 The abdux authors
//
// This file is part of abdux. Released under the MIT License; see LICENSE.
//
#pragma once

#include "abdux/core.hpp"
#include "abdux/dimacs.hpp"

#include <random>

namespace abdux::testing {

using Rng = std::mt19937_64;

struct Instance {
    AbductiveTheory theory;
    Observation observation;
};

struct StratifiedShape {
    int max_predicates = 8;
    int max_constants = 6;
    int max_rules = 8;
    bool constraints = true;
};

/// Non-ground stratified theory with abducibles, facts and, optionally,
/// integrity constraints. The observation is one or two ground atoms over
/// non-abducible predicates.
Instance random_stratified(Rng& rng, const StratifiedShape& shape = {});

/// Propositional normal program over `atoms` atoms, not necessarily
/// stratified. The first `abducibles` atoms are abducible.
Instance random_ground_normal(Rng& rng, int atoms, int abducibles, int rules, bool constraints);

/// Propositional stratified program (negation only on lower-numbered atoms).
std::vector<Rule> random_ground_stratified(Rng& rng, int atoms, int rules);

struct HornShape {
    int facts = 12;      // |B|
    int constants = 6;
    int layers = 2;
    int rules_per_layer = 2;
};

/// Non-recursive Horn theory without constraints.
Instance random_horn(Rng& rng, const HornShape& shape = {});

/// A random explanation candidate: up to `max_add` abducible atoms over the
/// constants of the theory (plus one outside constant when `outside`), and
/// up to `max_del` facts of B.
Explanation random_candidate(Rng& rng, const AbductiveTheory& t, std::size_t max_add, std::size_t max_del,
                             bool outside = true);

/// Random QBF exists X forall Y G, G a DNF with `terms` non-empty terms.
Qbf random_dnf_qbf(Rng& rng, int nx, int ny, int terms);

} // namespace abdux::testing
