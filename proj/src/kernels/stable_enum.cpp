//
// Copyright (c) 2026 The abdux authors
//
// This file is part of abdux. Released under the MIT License; see LICENSE.
//
#include "abdux/error.hpp"
#include "abdux/semantics.hpp"

#include <algorithm>
#include <cstdint>
#include <omp.h>

namespace abdux {

namespace {

struct EnumSetup {
    ModelBits facts;
    std::vector<int> candidates;
};

EnumSetup setup(const GroundProgram& gp, const std::vector<int>& extra_facts) {
    EnumSetup s;
    std::size_t n = gp.atoms.size();
    s.facts.assign(n, 0);
    for (int f : extra_facts) s.facts[static_cast<std::size_t>(f)] = 1;
    for (const auto& r : gp.rules)
        if (r.pos.empty() && r.neg.empty()) s.facts[static_cast<std::size_t>(r.head)] = 1;

    // Positive closure ignoring negation bounds every stable model.
    ModelBits reach = s.facts;
    for (bool changed = true; changed;) {
        changed = false;
        for (const auto& r : gp.rules) {
            if (reach[static_cast<std::size_t>(r.head)]) continue;
            if (std::all_of(r.pos.begin(), r.pos.end(), [&](int a) { return reach[static_cast<std::size_t>(a)]; })) {
                reach[static_cast<std::size_t>(r.head)] = 1;
                changed = true;
            }
        }
    }
    for (std::size_t a = 0; a < n; ++a)
        if (reach[a] && !s.facts[a]) s.candidates.push_back(static_cast<int>(a));
    return s;
}

/// Least model of the reduct of `gp` by `m`, compared against `m`.
bool is_stable(const GroundProgram& gp, const ModelBits& m, const ModelBits& facts, ModelBits& lm,
               std::vector<int>& counter, std::vector<int>& stack) {
    lm = facts;
    counter.assign(gp.rules.size(), -1);
    stack.clear();
    for (std::size_t a = 0; a < lm.size(); ++a)
        if (lm[a]) stack.push_back(static_cast<int>(a));
    for (std::size_t r = 0; r < gp.rules.size(); ++r) {
        const GroundRule& g = gp.rules[r];
        if (std::any_of(g.neg.begin(), g.neg.end(), [&](int a) { return m[static_cast<std::size_t>(a)]; })) continue;
        counter[r] = static_cast<int>(g.pos.size());
        if (g.pos.empty() && !lm[static_cast<std::size_t>(g.head)]) {
            lm[static_cast<std::size_t>(g.head)] = 1;
            stack.push_back(g.head);
        }
    }
    while (!stack.empty()) {
        int a = stack.back();
        stack.pop_back();
        if (!m[static_cast<std::size_t>(a)]) return false;
        for (int r : gp.watchers(a)) {
            int& c = counter[static_cast<std::size_t>(r)];
            if (c > 0 && --c == 0) {
                int h = gp.rules[static_cast<std::size_t>(r)].head;
                if (!lm[static_cast<std::size_t>(h)]) {
                    lm[static_cast<std::size_t>(h)] = 1;
                    stack.push_back(h);
                }
            }
        }
    }
    return lm == m;
}

void fill(const EnumSetup& s, std::uint64_t mask, ModelBits& m) {
    m = s.facts;
    for (std::size_t i = 0; i < s.candidates.size(); ++i)
        if (mask >> i & 1U) m[static_cast<std::size_t>(s.candidates[i])] = 1;
}

} // namespace

std::vector<ModelBits> stable_models_bits(const GroundProgram& gp, const std::vector<int>& extra_facts,
                                          std::size_t cap_atoms, Exec exec) {
    EnumSetup s = setup(gp, extra_facts);
    if (s.candidates.size() > cap_atoms || s.candidates.size() > 62)
        throw CapExceeded("stable-model enumeration over " + std::to_string(s.candidates.size()) +
                          " undetermined atoms exceeds the cap of " + std::to_string(cap_atoms));
    const auto total = static_cast<std::int64_t>(std::uint64_t{1} << s.candidates.size());
    std::vector<std::pair<std::uint64_t, ModelBits>> found;

    if (!exec.is_parallel()) {
        ModelBits m, lm;
        std::vector<int> counter, stack;
        for (std::int64_t mask = 0; mask < total; ++mask) {
            fill(s, static_cast<std::uint64_t>(mask), m);
            if (is_stable(gp, m, s.facts, lm, counter, stack)) found.emplace_back(mask, m);
        }
    } else {
        int threads = exec.jobs > 0 ? exec.jobs : omp_get_max_threads();
#pragma omp parallel num_threads(threads)
        {
            std::vector<std::pair<std::uint64_t, ModelBits>> local;
            ModelBits m, lm;
            std::vector<int> counter, stack;
#pragma omp for schedule(static) nowait
            for (std::int64_t mask = 0; mask < total; ++mask) {
                fill(s, static_cast<std::uint64_t>(mask), m);
                if (is_stable(gp, m, s.facts, lm, counter, stack)) local.emplace_back(mask, m);
            }
#pragma omp critical(abdux_stable_merge)
            found.insert(found.end(), std::make_move_iterator(local.begin()), std::make_move_iterator(local.end()));
        }
        std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    }

    std::vector<ModelBits> out;
    out.reserve(found.size());
    for (auto& f : found) out.push_back(std::move(f.second));
    return out;
}

std::vector<HerbrandModel> stable_models_bruteforce(const GroundProgram& gp, std::size_t cap_atoms, Exec exec) {
    std::vector<HerbrandModel> out;
    for (const auto& bits : stable_models_bits(gp, {}, cap_atoms, exec)) out.push_back(to_model(gp, bits));
    return out;
}

} // namespace abdux
