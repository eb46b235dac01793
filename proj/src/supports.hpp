//
// Copyright (c) 2026 The abdux authors
//
// This file is part of abdux. Released under the MIT License; see LICENSE.
//
#pragma once

#include "abdux/abduction.hpp"

#include <vector>

namespace abdux::detail {

/// Minimal sets S ⊆ `universe` with |S| <= max_add such that the observation
/// holds in the least model of R ∪ (B \ del) ∪ S. The workspace program must
/// be Horn. Sorted by size, then lexicographically.
std::vector<AtomSet> minimal_supports(const Workspace& ws, const AtomSet& universe, const std::vector<int>& del,
                                      const Observation& o, std::size_t max_add);

/// Minimal supports over the constants of T and O, built from proof trees of
/// a non-recursive Horn program with at most `k` assumed leaves. A variable
/// left open by a proof only takes constants appearing elsewhere in the
/// assumed atoms; other choices are always arbitrary.
std::vector<AtomSet> proof_supports(const AbductiveTheory& t, const Observation& o, std::size_t k);

} // namespace abdux::detail
